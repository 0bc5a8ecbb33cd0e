#include "orbit_cones.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace gitfan {

bool RelevanceTester::relevant(const std::vector<bool>& subset) {
  const std::size_t r = presentation_.variable_count();
  if (subset.size() != r) throw Error(ErrorKind::Contract, "subset mask has the wrong length");

  Ideal substituted{r, {}};
  std::string key;
  for (const auto& q : presentation_.relations()) {
    Polynomial qi = substitute_subset(q, subset);
    if (qi.is_zero()) continue;
    key += qi.to_string() + ";";
    substituted.generators.push_back(std::move(qi));
  }
  auto it = bases_.find(key);
  if (it == bases_.end()) {
    it = bases_.emplace(key, groebner_basis(substituted, MonomialOrder::degrevlex(r))).first;
  }
  const Ideal& basis = it->second;
  // sqrt<0> = 0 in a polynomial ring, and sqrt<1> contains everything.
  if (basis.generators.empty()) return true;
  if (is_unit_basis(basis)) return false;
  return !radical_membership(subset_monomial(r, subset), basis);
}

bool relevant_subset(const std::vector<bool>& subset, const GradedPresentation& p) {
  return RelevanceTester(p).relevant(subset);
}

bool relevant_subset(const IndexSet& subset, const GradedPresentation& p) {
  std::vector<bool> mask(p.variable_count(), false);
  for (auto i : subset) {
    if (i >= mask.size()) throw Error(ErrorKind::Contract, "subset index out of range");
    mask[i] = true;
  }
  return relevant_subset(mask, p);
}

OrbitConeSet enumerate_orbit_cones(const GradedPresentation& p, const OrbitConeOptions& options) {
  const std::size_t r = p.variable_count();
  const std::size_t d = p.lattice_rank();
  if (r >= 63 || (std::uint64_t{1} << r) > options.subset_cap) {
    throw Error(ErrorKind::SubsetCap, "2^" + std::to_string(r) + " subsets exceed the cap of " +
                                          std::to_string(options.subset_cap) +
                                          "; raise --subset-cap or reduce the number of variables");
  }

  RelevanceTester tester(p);
  std::vector<Cone> cones;
  std::vector<std::vector<IndexSet>> witnesses;
  std::map<std::string, std::size_t> index_of;
  std::size_t relevant_count = 0;

  const std::uint64_t total = std::uint64_t{1} << r;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::vector<bool> mask(r);
    IndexSet subset;
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < r; ++i) {
      mask[i] = (bits >> i) & 1U;
      if (mask[i]) {
        subset.push_back(i);
        gens.push_back(p.weights()[i]);
      }
    }
    if (!tester.relevant(mask)) continue;
    ++relevant_count;
    Cone c = Cone::from_generators(d, gens);
    auto [it, inserted] = index_of.try_emplace(c.canonical_key(), cones.size());
    if (inserted) {
      cones.push_back(std::move(c));
      witnesses.emplace_back();
    }
    witnesses[it->second].push_back(std::move(subset));
  }

  std::vector<std::size_t> order(cones.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return canonical_order(cones[a], cones[b]) < 0; });

  OrbitConeSet out{weight_cone(p), {}, {}, relevant_count};
  for (auto k : order) {
    out.cones.push_back(cones[k]);
    auto w = witnesses[k];
    std::sort(w.begin(), w.end(), [](const IndexSet& a, const IndexSet& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

std::string format_index_set(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

}  // namespace gitfan
