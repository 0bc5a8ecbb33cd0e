#include "presentation.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <set>

#include "json.hpp"

#include "error.hpp"

namespace gitfan {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

[[noreturn]] void parse_fail(const std::string& why) {
  throw Error(ErrorKind::Parse, "input document: " + why);
}

}  // namespace

GradedPresentation::GradedPresentation(std::vector<std::string> variables, std::vector<IntVector> weights,
                                       std::vector<Polynomial> relations)
    : variables_(std::move(variables)), weights_(std::move(weights)), relations_(std::move(relations)) {
  if (weights_.empty()) parse_fail("at least one variable is required");
  const std::size_t d = weights_.front().size();
  if (d == 0) parse_fail("weights must have at least one entry");
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (weights_[i].size() != d) {
      parse_fail("weight of variable " + std::to_string(i + 1) + " has length " +
                 std::to_string(weights_[i].size()) + ", expected " + std::to_string(d));
    }
  if (variables_.empty()) variables_ = Polynomial::default_names(weights_.size());
  if (variables_.size() != weights_.size()) {
    parse_fail(std::to_string(variables_.size()) + " variable names for " + std::to_string(weights_.size()) +
               " weights");
  }
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (!is_identifier(v)) parse_fail("'" + v + "' is not a valid variable name");
    if (!seen.insert(v).second) parse_fail("duplicate variable name '" + v + "'");
  }
  for (const auto& q : relations_)
    if (q.variable_count() != weights_.size()) parse_fail("relation lives in a ring of the wrong size");
}

GradedPresentation GradedPresentation::from_document(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(std::string("not valid JSON (") + e.what() + ")");
  }
  if (!doc.is_object()) parse_fail("top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "variables" && key != "weights" && key != "relations") parse_fail("unknown field '" + key + "'");
  }
  if (!doc.contains("weights") || !doc["weights"].is_array()) parse_fail("'weights' must be a list of integer vectors");

  std::vector<IntVector> weights;
  for (const auto& w : doc["weights"]) {
    if (!w.is_array()) parse_fail("each weight must be a list of integers");
    std::vector<Integer> entries;
    for (const auto& e : w) {
      if (!e.is_number_integer()) parse_fail("weight entries must be integers");
      entries.emplace_back(std::to_string(e.get<std::int64_t>()));
    }
    weights.emplace_back(std::move(entries));
  }

  std::vector<std::string> names;
  if (doc.contains("variables")) {
    if (!doc["variables"].is_array()) parse_fail("'variables' must be a list of names");
    for (const auto& v : doc["variables"]) {
      if (!v.is_string()) parse_fail("variable names must be strings");
      names.push_back(v.get<std::string>());
    }
  }
  if (names.empty()) names = Polynomial::default_names(weights.size());
  if (names.size() != weights.size()) {
    parse_fail(std::to_string(names.size()) + " variable names for " + std::to_string(weights.size()) + " weights");
  }

  std::vector<Polynomial> relations;
  if (doc.contains("relations")) {
    if (!doc["relations"].is_array()) parse_fail("'relations' must be a list of polynomial strings");
    for (const auto& q : doc["relations"]) {
      if (!q.is_string()) parse_fail("relations must be strings");
      relations.push_back(Polynomial::parse(q.get<std::string>(), names));
    }
  }
  return GradedPresentation(std::move(names), std::move(weights), std::move(relations));
}

std::string GradedPresentation::to_document() const {
  nlohmann::ordered_json doc;
  doc["variables"] = variables_;
  doc["weights"] = nlohmann::ordered_json::array();
  for (const auto& w : weights_) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& e : w.entries()) row.push_back(e.get_si());
    doc["weights"].push_back(row);
  }
  doc["relations"] = nlohmann::ordered_json::array();
  for (const auto& q : relations_) doc["relations"].push_back(q.to_string(variables_));
  return doc.dump();
}

IntVector GradedPresentation::degree(const Monomial& m) const {
  IntVector deg(lattice_rank());
  for (std::size_t i = 0; i < m.variable_count(); ++i)
    if (m[i] != 0) deg += Integer(m[i]) * weights_[i];
  return deg;
}

std::string GradedPresentation::digest() const {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : to_document()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const char* integrality_assumption() {
  return "the relation ideal is assumed prime (A integral); this is not checked";
}

ValidationReport validate(const GradedPresentation& p) {
  ValidationReport report;
  report.assumptions.push_back(integrality_assumption());
  for (std::size_t j = 0; j < p.relations().size(); ++j) {
    const Polynomial& q = p.relations()[j];
    const std::string label = "relation " + std::to_string(j + 1) + " '" + q.to_string(p.variables()) + "'";
    if (q.is_zero()) continue;
    if (q.is_constant()) {
      report.valid = false;
      report.problems.push_back(label + " is a nonzero constant; the ideal must be proper");
      continue;
    }
    const auto first = q.terms().begin();
    const IntVector w0 = p.degree(first->first);
    for (auto it = std::next(first); it != q.terms().end(); ++it) {
      const IntVector w = p.degree(it->first);
      if (w != w0) {
        report.valid = false;
        report.problems.push_back(label + " is not homogeneous: weights " + w0.to_string() + " vs " +
                                  w.to_string());
        break;
      }
    }
  }
  return report;
}

void require_valid(const GradedPresentation& p) {
  const auto report = validate(p);
  if (!report.valid) throw Error(ErrorKind::Invalid, report.problems.front());
}

Cone weight_cone(const GradedPresentation& p) {
  return Cone::from_generators(p.lattice_rank(), p.weights());
}

bool fibers_bounded(const std::vector<IntVector>& weights) {
  if (weights.empty()) return true;
  const std::size_t r = weights.size();
  const std::size_t d = weights.front().size();
  std::vector<IntVector> orthant;
  for (std::size_t i = 0; i < r; ++i) {
    IntVector e(r);
    e[i] = 1;
    orthant.push_back(std::move(e));
  }
  std::vector<IntVector> rows;
  for (std::size_t k = 0; k < d; ++k) {
    IntVector row(r);
    for (std::size_t i = 0; i < r; ++i) row[i] = weights[i][k];
    rows.push_back(std::move(row));
  }
  return Cone::from_inequalities(r, orthant, rows).dim() == 0;
}

}  // namespace gitfan
