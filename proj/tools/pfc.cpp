#include "pfc/asymptotics.hpp"
#include "pfc/diagram.hpp"
#include "pfc/geometry.hpp"
#include "pfc/io.hpp"
#include "pfc/kreweras.hpp"
#include "pfc/transforms.hpp"
#include "pfc/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

using namespace pfc;

namespace {

enum Exit { kPass = 0, kViolation = 1, kUsage = 2, kMismatch = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::optional<std::size_t> k;
  std::string base, p, q, family = "P", which, format, element;
  std::uint64_t seed = 1;
  std::size_t t_order = 3, n = 2, jobs = 0;
  bool orbits = false;
};

std::size_t max_ground() {
  if (const char* env = std::getenv("PFC_MAX_GROUND")) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      throw UsageError("PFC_MAX_GROUND must be a nonnegative integer");
    }
  }
  return kDefaultMaxGround;
}

void require_ground(std::size_t k) {
  if (2 * k > max_ground())
    throw SizeLimitError("ground size " + std::to_string(2 * k) + " exceeds the ceiling " +
                         std::to_string(max_ground()) + " (set PFC_MAX_GROUND to raise it)");
}

// Largest column number mentioned in a partition string.
std::size_t infer_k(const std::string& text) {
  std::size_t k = 0, cur = 0;
  bool in_number = false;
  for (char c : text + " ") {
    if (c >= '0' && c <= '9') {
      cur = cur * 10 + static_cast<std::size_t>(c - '0');
      in_number = true;
    } else if (in_number) {
      k = std::max(k, cur);
      cur = 0;
      in_number = false;
    }
  }
  return k;
}

Partition operand(const Flags& f, const std::string& text, const char* name) {
  if (text.empty() && !f.k) throw UsageError(std::string("missing --") + name);
  const std::size_t k = f.k ? *f.k : infer_k(text);
  require_ground(k);
  try {
    return parse_pk(text, k);
  } catch (const ParseError&) {
    // A well-formed partition of another size is a mismatch, not a parse failure.
    const std::size_t own = infer_k(text);
    if (f.k && own != k && own <= max_ground() / 2) {
      parse_pk(text, own);
      throw OperandMismatch("--" + std::string(name) + " is in P_" + std::to_string(own) + ", expected P_" +
                            std::to_string(k));
    }
    throw;
  }
}

std::size_t degree_flag(const Flags& f) {
  if (!f.k) throw UsageError("missing --k");
  require_ground(*f.k);
  return *f.k;
}

Partition base_of(const Flags& f, std::size_t k) {
  if (f.base.empty()) return make_identity(k);
  auto b = parse_pk(f.base, k);
  return b;
}

OrderKind kind_of(const Flags& f) { return f.which.empty() ? OrderKind::Geodesic : parse_order_kind(f.which); }

void require_format(const Flags& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f.format == a) return;
  throw UsageError("format " + f.format + " is not available here");
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_enumerate(const Flags& f) {
  const std::size_t k = degree_flag(f);
  require_format(f, {"text", "json"});
  auto members = family_members(parse_family(f.family), k, max_ground());
  std::vector<Partition> out;
  if (f.orbits) {
    std::set<Partition> reps;
    for (const auto& p : members) reps.insert(orbit_of(p).rep);
    out.assign(reps.begin(), reps.end());
  } else {
    out = std::move(members);
  }
  if (f.format == "json") {
    Json list = Json::array();
    for (const auto& p : out) list.push_back(format_pk(p));
    print_json({{"k", k}, {"family", f.family}, {"orbits", f.orbits}, {"count", out.size()}, {"partitions", list}});
    return kPass;
  }
  std::cerr << out.size() << (f.orbits ? " orbits\n" : " partitions\n");
  for (const auto& p : out) std::cout << format_pk(p) << "\n";
  return kPass;
}

void emit_value(const Flags& f, const std::string& what, const std::string& value) {
  if (f.format == "json") print_json({{"query", what}, {"value", value}});
  else std::cout << value << "\n";
}

int cmd_query(const Flags& f, const std::string& what) {
  require_format(f, {"text", "json"});
  if (what == "trace") {
    auto p = operand(f, f.p, "p");
    emit_value(f, what, to_string(LaurentScalar::power(static_cast<int>(trace_exponent(p)))));
    return kPass;
  }
  if (what == "moment" || what == "cumulant") {
    auto p = operand(f, f.p, "p");
    AlgebraElement e;
    if (!f.element.empty()) {
      std::ifstream in(f.element);
      if (!in) throw UsageError("cannot read " + f.element);
      try {
        e = algebra_element_from_json(Json::parse(in));
      } catch (const Json::exception& ex) {
        throw ParseError(ex.what());
      }
    } else {
      e = AlgebraElement::basis(operand(f, f.q, "q"));
    }
    auto v = what == "moment" ? moment(e, p) : cumulant(e, p);
    if (f.format == "json") print_json({{"query", what}, {"value", to_string(v)}, {"laurent", to_json(v)}});
    else std::cout << to_string(v) << "\n";
    return kPass;
  }
  auto p = operand(f, f.p, "p");
  auto q = operand(f, f.q, "q");
  require_same_degree(p, q);
  const std::size_t k = degree(p);
  if (what == "distance") {
    emit_value(f, what, to_string(distance(p, q)));
  } else if (what == "defect") {
    emit_value(f, what, to_string(defect(base_of(f, k), q, p)));
  } else if (what == "order") {
    emit_value(f, what, in_order(kind_of(f), base_of(f, k), q, p) ? "true" : "false");
  } else if (what == "mobius") {
    emit_value(f, what, to_string(mobius(kind_of(f), base_of(f, k), p, q)));
  } else if (what == "eta") {
    emit_value(f, what, to_string(eta(p, q)));
  } else if (what == "kreweras") {
    auto ks = kreweras_set(p, q, max_ground());
    if (f.format == "json") {
      Json list = Json::array();
      for (const auto& r : ks.complements) list.push_back(format_pk(r));
      print_json({{"query", what}, {"base", format_pk(p)}, {"prefix", format_pk(q)}, {"complements", list}});
    } else {
      for (const auto& r : ks.complements) std::cout << format_pk(r) << "\n";
    }
  } else if (what == "compose") {
    auto c = compose(p, q);
    if (f.format == "json") print_json({{"query", what}, {"product", format_pk(c.product)}, {"loops", c.loops}});
    else std::cout << format_pk(c.product) << "\nloops " << c.loops << "\n";
  } else {
    throw UsageError("unknown query: " + what);
  }
  return kPass;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

int cmd_export(const Flags& f, const std::string& what) {
  const std::size_t k = degree_flag(f);
  const auto b = base_of(f, k);
  const GroundSet ground{2 * k};
  if (what == "matrix") {
    require_format(f, {"csv", "json", "text"});
    const std::string which = f.which.empty() ? "G" : f.which;
    const bool inverse_wanted = which == "Ginv";
    const auto kind = inverse_wanted ? OrderKind::Geodesic : parse_order_kind(which);
    auto m = order_matrix(kind, b, ground, max_ground());
    RationalMatrix entries = m.entries;
    if (inverse_wanted)
      for (std::size_t i = 0; i < m.basis.size(); ++i)
        for (std::size_t j = 0; j < m.basis.size(); ++j) entries(i, j) = mobius(kind, b, m.basis[j], m.basis[i]);
    if (f.format == "json") {
      Json rows = Json::array(), labels = Json::array();
      for (std::size_t i = 0; i < m.basis.size(); ++i) {
        labels.push_back(format_pk(m.basis[i]));
        Json row = Json::array();
        for (std::size_t j = 0; j < m.basis.size(); ++j) row.push_back(to_string(entries(i, j)));
        rows.push_back(row);
      }
      print_json({{"which", which}, {"k", k}, {"base", format_pk(b)}, {"basis", labels}, {"entries", rows}});
      return kPass;
    }
    const char* sep = f.format == "csv" ? "," : " ";
    for (std::size_t i = 0; i < m.basis.size(); ++i) {
      for (std::size_t j = 0; j < m.basis.size(); ++j) std::cout << (j ? sep : "") << to_string(entries(i, j));
      std::cout << "\n";
    }
    return kPass;
  }
  if (what == "hasse") {
    require_format(f, {"dot", "json", "text"});
    auto h = hasse_diagram(kind_of(f), b, ground, max_ground());
    if (f.format == "json") {
      Json nodes = Json::array(), edges = Json::array();
      for (const auto& p : h.basis) nodes.push_back(format_pk(p));
      for (auto [lo, hi] : h.edges) edges.push_back({lo, hi});
      print_json({{"k", k}, {"base", format_pk(b)}, {"nodes", nodes}, {"edges", edges}});
    } else if (f.format == "dot") {
      std::cout << "digraph hasse {\n  rankdir=BT;\n";
      for (std::size_t i = 0; i < h.basis.size(); ++i)
        std::cout << "  n" << i << " [label=\"" << dot_escape(format_pk(h.basis[i])) << "\"];\n";
      for (auto [lo, hi] : h.edges) std::cout << "  n" << lo << " -> n" << hi << ";\n";
      std::cout << "}\n";
    } else {
      for (auto [lo, hi] : h.edges) std::cout << format_pk(h.basis[lo]) << " < " << format_pk(h.basis[hi]) << "\n";
    }
    return kPass;
  }
  throw UsageError("unknown export: " + what);
}

int cmd_verify(const Flags& f, const std::string& suite) {
  require_format(f, {"text", "json"});
  verify::Options o;
  if (f.k) o.k = *f.k;
  require_ground(o.k);
  o.seed = f.seed;
  o.t_order = f.t_order;
  o.n = f.n;
  o.jobs = f.jobs ? f.jobs : std::max(1u, std::thread::hardware_concurrency());
  auto reports = verify::run(suite, o);
  bool ok = true;
  Json out = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    if (f.format == "json") {
      out.push_back({{"check", r.name}, {"passed", r.passed()}, {"checks", r.checks}, {"failures", r.failure_count},
                     {"counterexamples", r.failures}});
      continue;
    }
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks";
    if (!r.passed()) std::cout << ", " << r.failure_count << " failed";
    std::cout << ")\n";
    for (const auto& c : r.failures) std::cout << "  " << c << "\n";
  }
  if (f.format == "json") print_json({{"suite", suite}, {"passed", ok}, {"reports", out}});
  return ok ? kPass : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pfc: partitions, diagram algebras and their asymptotics"};
  app.set_config("--config", "", "key=value file; flags on the command line take precedence");
  app.require_subcommand(1);
  Flags f;
  app.add_option("--k", f.k, "degree k of P_k");
  app.add_option("--base", f.base, "base partition (default id_k)");
  app.add_option("--p", f.p, "first operand, e.g. \"1 1' | 2 2'\"");
  app.add_option("--q", f.q, "second operand");
  app.add_option("--family", f.family, "P, S, B, Bs, H or D");
  app.add_option("--which", f.which, "order kind G, C, S (also F); Ginv for the inverse matrix");
  app.add_option("--format", f.format, "text, json, csv or dot (export defaults: csv for matrix, dot for hasse)");
  app.add_option("--seed", f.seed, "random seed for sampled checks");
  app.add_option("--t-order", f.t_order, "Taylor order for semigroups and exponentials");
  app.add_option("--n", f.n, "fluctuation order");
  app.add_option("--jobs", f.jobs, "worker threads (default: logical cores)");
  app.add_option("--element", f.element, "JSON algebra element for moment and cumulant queries");
  app.add_flag("--orbits", f.orbits, "list orbit representatives under conjugation");

  auto* enumerate = app.add_subcommand("enumerate", "list P_k or a family");
  enumerate->fallthrough();
  std::string query_what, export_what, suite;
  auto* query = app.add_subcommand("query", "distance, defect, order, mobius, kreweras, eta, compose, trace, moment, cumulant");
  query->add_option("what", query_what)->required();
  query->fallthrough();
  auto* exp = app.add_subcommand("export", "matrix or hasse");
  exp->add_option("what", export_what)->required();
  exp->fallthrough();
  auto* ver = app.add_subcommand("verify", "run a verification suite, or all");
  ver->add_option("suite", suite)->required();
  ver->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (f.format.empty()) f.format = !exp->parsed() ? "text" : export_what == "matrix" ? "csv" : "dot";

  try {
    if (enumerate->parsed()) return cmd_enumerate(f);
    if (query->parsed()) return cmd_query(f, query_what);
    if (exp->parsed()) return cmd_export(f, export_what);
    if (ver->parsed()) return cmd_verify(f, suite);
  } catch (const OperandMismatch& e) {
    std::cerr << "operand mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const SizeLimitError& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
