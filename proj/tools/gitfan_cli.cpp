// gitfan: command-line front end over the C library interface.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gitfan/gitfan.h"
#include "json.hpp"

namespace {

constexpr int kUsageExit = 2;
constexpr int kIoExit = 13;

struct Options {
  std::string input;
  std::vector<std::string> pair;
  unsigned bound = 12;
  std::uint64_t subset_cap = std::uint64_t{1} << 20;
  std::string format = "structured";
  std::string out;
  bool force_oracle = false;
};

struct CliFailure {
  int code;
  std::string reason;
};

[[noreturn]] void library_failure(gf_status status) { throw CliFailure{status, gf_last_error()}; }

struct StringDeleter {
  void operator()(char* s) const { gf_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct PresentationDeleter {
  void operator()(gf_presentation* p) const { gf_presentation_free(p); }
};
struct OrbitConesDeleter {
  void operator()(gf_orbit_cones* oc) const { gf_orbit_cones_free(oc); }
};

std::unique_ptr<gf_presentation, PresentationDeleter> load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliFailure{kIoExit, "io-error: cannot read '" + path + "'"};
  std::stringstream buf;
  buf << in.rdbuf();
  gf_presentation* p = nullptr;
  if (gf_status s = gf_presentation_from_document(buf.str().c_str(), &p); s != GF_OK) library_failure(s);
  return std::unique_ptr<gf_presentation, PresentationDeleter>(p);
}

std::unique_ptr<gf_orbit_cones, OrbitConesDeleter> orbit_cones(const gf_presentation* p, const Options& opt) {
  gf_orbit_cones* oc = nullptr;
  if (gf_status s = gf_orbit_cones_compute(p, opt.subset_cap, &oc); s != GF_OK) library_failure(s);
  return std::unique_ptr<gf_orbit_cones, OrbitConesDeleter>(oc);
}

std::vector<std::int64_t> parse_weight(const std::string& text, std::size_t rank) {
  std::vector<std::int64_t> v;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CliFailure{kUsageExit, "usage: weight '" + text + "' is not a comma-separated integer vector"};
    }
  }
  if (v.size() != rank) {
    throw CliFailure{kUsageExit, "usage: weight '" + text + "' has " + std::to_string(v.size()) +
                                     " entries, lattice rank is " + std::to_string(rank)};
  }
  return v;
}

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> parse_pair(const Options& opt, std::size_t rank) {
  if (opt.pair.size() != 2) throw CliFailure{kUsageExit, "usage: --pair needs two weights, e.g. --pair 2,1 1,2"};
  return {parse_weight(opt.pair[0], rank), parse_weight(opt.pair[1], rank)};
}

// --- pretty rendering -------------------------------------------------------

using nlohmann::ordered_json;

std::string vec(const ordered_json& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].dump();
  return s + ")";
}

std::string vec_list(const ordered_json& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + vec(vs[i]);
  return s.empty() ? "-" : s;
}

std::string cone_text(const ordered_json& c) {
  std::string s = "dim " + c["dim"].dump() + ", rays " + vec_list(c["rays"]);
  if (!c["lineality"].empty()) s += ", lineality " + vec_list(c["lineality"]);
  return s;
}

std::string pretty_oracle(const ordered_json& o) {
  std::ostringstream out;
  out << "  n   |D_nu| |D_nv| target  sum  surjective  witness\n";
  for (const auto& d : o["degrees"]) {
    out << "  " << std::setw(3) << d["n"].get<unsigned>() << std::setw(7) << d["fiber_nu"].get<std::size_t>()
        << std::setw(7) << d["fiber_nv"].get<std::size_t>() << std::setw(7) << d["target"].get<std::size_t>()
        << std::setw(6) << d["minkowski_sum"].get<std::size_t>() << "  " << std::setw(10)
        << (d["surjective"].get<bool>() ? "yes" : "no") << "  " << (d["witness"].is_null() ? "-" : vec(d["witness"]))
        << "\n";
  }
  out << "  " << o["annotation"].get<std::string>() << "\n";
  return out.str();
}

std::string pretty(const std::string& command, const ordered_json& doc) {
  std::ostringstream out;
  if (command == "validate") {
    out << "valid: " << (doc["valid"].get<bool>() ? "yes" : "no") << "\n";
    for (const auto& p : doc["problems"]) out << "problem: " << p.get<std::string>() << "\n";
    for (const auto& a : doc["assumptions"]) out << "assumption: " << a.get<std::string>() << "\n";
  } else if (command == "weight-cone") {
    out << "weight cone: " << cone_text(doc["weight_cone"]) << "\n";
    out << "inequalities: " << vec_list(doc["weight_cone"]["inequalities"]) << "\n";
    out << "fibers bounded: " << (doc["fibers_bounded"].get<bool>() ? "yes" : "no") << "\n";
  } else if (command == "orbit-cones") {
    out << doc["orbit_cones"].size() << " orbit cones from " << doc["relevant_subsets"].dump() << " relevant subsets\n";
    for (const auto& c : doc["orbit_cones"]) {
      out << "  [" << c["index"].dump() << "] dim " << c["dim"].dump() << "  rays " << vec_list(c["rays"]);
      if (!c["lineality"].empty()) out << "  lineality " << vec_list(c["lineality"]);
      out << "  from";
      for (const auto& w : c["witness_subsets"]) {
        std::string s = "{";
        for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + w[i].dump();
        out << " " << s << "}";
      }
      out << "\n";
    }
  } else if (command == "gitfan") {
    out << "GIT-fan with " << doc["cones"].size() << " cones, " << doc["maximal"].size() << " maximal"
        << (doc["verified"].get<bool>() ? " (fan axioms verified)" : " (FAN AXIOMS FAILED)") << "\n";
    for (const auto& c : doc["cones"]) {
      out << "  [" << c["index"].dump() << "] " << cone_text(c) << "\n";
    }
  } else if (command == "classify") {
    out << "pair " << vec(doc["u"]) << ", " << vec(doc["v"]) << ": " << doc["verdict"].get<std::string>() << "\n";
    if (!doc["common_cone"].is_null()) {
      out << "common GIT-cone: " << cone_text(doc["common_cone"]) << "\n";
      out << "relative interior: u " << (doc["relative_interior"]["u"].get<bool>() ? "yes" : "no") << ", v "
          << (doc["relative_interior"]["v"].get<bool>() ? "yes" : "no") << "\n";
    }
    for (const auto& f : doc["diagnostics"]["failing_orbit_cones"]) {
      out << "orbit cone " << vec_list(f["rays"]) << " contains u+v = " << vec(f["contains_sum"]) << " but misses";
      for (const auto& m : f["misses"]) out << " " << m.get<std::string>();
      out << "\n";
    }
    if (!doc["oracle"].is_null()) out << "lattice-point scan:\n" << pretty_oracle(doc["oracle"]);
    if (!doc["oracle_unavailable"].is_null()) {
      out << "lattice-point scan unavailable: " << doc["oracle_unavailable"].get<std::string>() << "\n";
    }
  } else if (command == "oracle") {
    out << "pair " << vec(doc["u"]) << ", " << vec(doc["v"]) << ", degrees 1.." << doc["bound"].dump() << "\n";
    out << pretty_oracle(doc);
  }
  return out.str();
}

// --- dispatch ---------------------------------------------------------------

void emit(const Options& opt, const std::string& command, const std::string& document, bool structured_only) {
  std::string text = document;
  if (!structured_only && opt.format == "pretty") text = pretty(command, ordered_json::parse(document));
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw CliFailure{kIoExit, "io-error: cannot write '" + opt.out + "'"};
  file << text;
}

OwnedString take(char* s) { return OwnedString(s); }

int run(const std::string& command, const Options& opt) {
  auto p = load(opt.input);
  char* raw = nullptr;
  gf_status status = GF_OK;

  if (command == "validate") {
    status = gf_validate(p.get(), &raw);
    auto doc = take(raw);
    if (status == GF_OK) emit(opt, command, doc.get(), false);
  } else if (command == "weight-cone") {
    status = gf_weight_cone(p.get(), &raw);
    auto doc = take(raw);
    if (status == GF_OK) emit(opt, command, doc.get(), false);
  } else if (command == "orbit-cones") {
    auto oc = orbit_cones(p.get(), opt);
    status = gf_orbit_cones_document(oc.get(), &raw);
    auto doc = take(raw);
    if (status == GF_OK) emit(opt, command, doc.get(), false);
  } else if (command == "gitfan") {
    auto oc = orbit_cones(p.get(), opt);
    status = gf_gitfan_document(oc.get(), &raw);
    auto doc = take(raw);
    if (status == GF_OK) emit(opt, command, doc.get(), false);
  } else if (command == "plot") {
    auto oc = orbit_cones(p.get(), opt);
    status = gf_gitfan_svg(oc.get(), &raw);
    auto doc = take(raw);
    if (status == GF_OK) emit(opt, command, doc.get(), true);
  } else if (command == "classify") {
    const auto [u, v] = parse_pair(opt, gf_presentation_lattice_rank(p.get()));
    auto oc = orbit_cones(p.get(), opt);
    status = gf_classify(oc.get(), u.data(), v.data(), u.size(), opt.bound, opt.force_oracle ? 1 : 0, &raw);
    auto doc = take(raw);
    if (status == GF_OK) emit(opt, command, doc.get(), false);
  } else if (command == "oracle") {
    const auto [u, v] = parse_pair(opt, gf_presentation_lattice_rank(p.get()));
    status = gf_oracle(p.get(), u.data(), v.data(), u.size(), opt.bound, &raw);
    auto doc = take(raw);
    if (status == GF_OK) emit(opt, command, doc.get(), false);
  }
  if (status != GF_OK) library_failure(status);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GIT-fans, orbit cones and generating pairs of multigraded algebras"};
  app.require_subcommand(1, 1);
  Options opt;

  struct Command {
    const char* name;
    const char* help;
    bool pair;
  };
  const Command commands[] = {
      {"validate", "check homogeneity and properness of the relations", false},
      {"weight-cone", "rays and inequalities of the weight cone", false},
      {"orbit-cones", "orbit cones with their witness subsets", false},
      {"gitfan", "all GIT-cones (lattice rank <= 3)", false},
      {"classify", "classify a weight pair and attach lattice-point evidence", true},
      {"oracle", "degree-by-degree surjectivity scan (polynomial rings only)", true},
      {"plot", "SVG drawing of a rank-2 GIT-fan", false},
  };
  for (const auto& s : commands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("input", opt.input, "presentation document")->required();
    sub->add_option("--subset-cap", opt.subset_cap, "refuse more than this many subsets")->capture_default_str();
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"structured", "pretty"}))
        ->capture_default_str();
    sub->add_option("--out", opt.out, "write the document to this path");
    if (s.pair) {
      sub->add_option("--pair", opt.pair, "two weights, e.g. --pair 2,1 1,2")->expected(2)->required();
      sub->add_option("--bound", opt.bound, "oracle scan bound N")->check(CLI::PositiveNumber)->capture_default_str();
    }
    if (std::string(s.name) == "classify") {
      sub->add_flag("--oracle", opt.force_oracle, "attach the lattice-point scan whatever the verdict");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return kUsageExit;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), opt);
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.reason << "\n";
    return f.code;
  }
}
