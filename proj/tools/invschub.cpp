#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "invschub/error.hpp"
#include "invschub/insertion.hpp"
#include "invschub/involution.hpp"
#include "invschub/notation.hpp"
#include "invschub/parallel.hpp"
#include "invschub/pfaffian.hpp"
#include "invschub/schubert.hpp"
#include "invschub/transition.hpp"
#include "invschub/vexillary.hpp"

using namespace invschub;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitGuard = 2;
constexpr int kExitFalsified = 3;
constexpr int kExitInternal = 4;

struct Options {
  std::string notation = "auto";
  std::string format = "text";
  int width = 0;
  int guard = 12;
  int support_guard = 16;
  int jobs = 1;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

bool json_out(const Options& o) { return o.format == "json"; }

Permutation read_perm(const std::string& text, const Options& o) {
  return parse_permutation(text, parse_notation_name(o.notation));
}

Involution read_inv(const std::string& text, const Options& o) { return Involution(read_perm(text, o)); }

void check_support(const Permutation& w, const Options& o) {
  if (!w.is_identity() && static_cast<int>(w.support().size()) > o.support_guard)
    throw GuardExceeded("support has " + std::to_string(w.support().size()) + " points; guard is " +
                        std::to_string(o.support_guard));
}

void check_words(const Involution& y, const Options& o) {
  if (inv_length(y) > o.guard)
    throw GuardExceeded("inv_length " + std::to_string(inv_length(y)) + " exceeds guard " +
                        std::to_string(o.guard));
}

json poly_json(const Polynomial& p) {
  json terms = json::array();
  auto mt = p.machine_terms();
  for (auto it = mt.rbegin(); it != mt.rend(); ++it)
    terms.push_back({{"exponents", it->first}, {"coeff", json::parse(it->second.get_str())}});
  return {{"version", 1}, {"polynomial", p.to_string()}, {"terms", terms}};
}

void print_poly(const Polynomial& p, const Options& o) {
  Polynomial q = o.width > 0 ? truncate(p, o.width) : p;
  if (json_out(o)) std::cout << poly_json(q).dump() << '\n';
  else std::cout << (q.is_zero() ? std::string("0") : q.to_string()) << '\n';
}

void print_expansion(const SymFunExpansion& e, const Options& o) {
  if (json_out(o)) std::cout << e.to_json() << '\n';
  else std::cout << e.to_text() << '\n';
}

std::vector<int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    int lo, hi;
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
    if (lo < 1 || hi < lo) throw UsageError("bad range " + text);
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  } catch (const std::logic_error&) {
    throw UsageError("bad range " + text + " (expected N or A..B)");
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else {
      throw UsageError("bad integer list " + text);
    }
  }
  return out;
}

// ---- subcommands ----

void cmd_schubert(const std::string& elem, const Options& o) {
  Permutation w = read_perm(elem, o);
  if (!w.in_s_infinity()) throw PreconditionError("Schubert polynomials need w in S_infinity");
  check_support(w, o);
  print_poly(schubert_poly(w), o);
}

void cmd_inv_schubert(const std::string& elem, const std::string& method, const Options& o) {
  Involution y = read_inv(elem, o);
  check_support(y.perm(), o);
  if (method == "atoms") check_words(y, o);
  print_poly(inv_schubert_poly(y, method == "atoms" ? InvMethod::atom_sum : InvMethod::recursion), o);
}

void cmd_expand(const std::string& elem, const std::string& basis, const std::string& route,
                const Options& o) {
  Involution y = read_inv(elem, o);
  check_support(y.perm(), o);
  SymFunExpansion e;
  if (route == "tree") {
    e = expand_Fhat(y, o.jobs);
  } else if (route == "beta") {
    check_words(y, o);
    e = beta_coefficients(y, o.guard, o.jobs);
  } else if (route == "words") {
    e = expand_in_schurP(inv_stanley_monomial_vector(y));
  } else {  // truncation
    int d = inv_length(y);
    if (o.width < d)
      throw UsageError("--width must be at least the degree " + std::to_string(d) + " for this route");
    e = expand_in_schurP(stable_Fhat(y, o.width), d);
  }
  if (basis == "Q") e = schurQ_scale(e, kappa(y));
  print_expansion(e, o);
}

void cmd_ls_tree(const std::string& elem, const std::string& kind, const std::string& exp, const Options& o) {
  LSTreeNode root;
  bool inv = kind == "involution";
  if (inv) {
    Involution y = read_inv(elem, o);
    check_support(y.perm(), o);
    root = inv_ls_tree(y, o.jobs);
  } else {
    Permutation w = read_perm(elem, o);
    check_support(w, o);
    root = classical_ls_tree(w);
  }
  std::cout << (exp == "edges" ? tree_to_edges(root, inv) : tree_to_text(root, inv));
}

json tableau_json(const ShiftedTableau& t) { return t.rows; }
json tableau_json(const SetValuedShiftedTableau& t) { return t.rows; }

void cmd_insert(const std::string& word_text, const std::string& mode, bool trace, const Options& o) {
  Word a = parse_word(word_text);
  std::vector<SHStep> steps;
  json out = {{"version", 1}, {"mode", mode}, {"word", a}};
  std::string p_text, q_text;
  if (mode == "ick") {
    ICKResult r = involution_ck_insert(a);
    steps = r.trace;
    out["involution"] = format_cycles(r.y.perm());
    out["P"] = tableau_json(r.p);
    out["Q"] = tableau_json(r.q);
    out["reading_word"] = reading_word(r.p);
    p_text = to_text(r.p);
    q_text = to_text(r.q);
  } else {
    SHResult r = shifted_hecke_insert(a);
    steps = r.trace;
    out["P"] = tableau_json(r.p);
    out["Q"] = tableau_json(r.q);
    out["reading_word"] = reading_word(r.p);
    p_text = to_text(r.p);
    q_text = to_text(r.q);
  }
  if (json_out(o)) {
    if (trace) {
      json js = json::array();
      for (const SHStep& s : steps)
        js.push_back({{"letter", s.letter}, {"j", s.j}, {"dir", s.dir}, {"P", tableau_json(s.p)},
                      {"Q", tableau_json(s.q)}});
      out["trace"] = js;
    }
    std::cout << out.dump() << '\n';
    return;
  }
  if (trace) {
    for (std::size_t k = 0; k < steps.size(); ++k) {
      const SHStep& s = steps[k];
      std::cout << "step " << k + 1 << ": insert " << s.letter << " (j=" << s.j << ", dir=" << s.dir << ")\n";
      std::cout << "P:\n" << to_text(s.p) << "Q:\n" << to_text(s.q);
    }
    std::cout << "final\n";
  }
  std::cout << "P:\n" << p_text << "Q:\n" << q_text;
  if (mode == "ick") std::cout << "involution: " << out["involution"].get<std::string>() << '\n';
}

std::string set_text(const std::vector<int>& e) {
  std::string s = "{";
  for (std::size_t k = 0; k < e.size(); ++k) s += (k ? "," : "") + std::to_string(e[k]);
  return s + "}";
}

void cmd_classify(const std::string& elem, const std::string& property, const Options& o) {
  Involution y = read_inv(elem, o);
  check_support(y.perm(), o);
  json out = {{"version", 1}, {"involution", format_cycles(y.perm())}};
  std::ostringstream text;
  auto want = [&](const char* name) { return property == "all" || property == name; };
  auto pattern_part = [&](const char* key, const std::vector<NamedPattern>& list) {
    auto hit = first_pattern_hit(y, list);
    out[key] = {{"value", !hit}};
    text << key << ": " << (hit ? "false" : "true");
    if (hit) {
      out[key]["witness"] = {{"pattern", format_cycles(hit->pattern.perm())}, {"positions", hit->witness}};
      text << " (contains " << format_cycles(hit->pattern.perm()) << " at " << set_text(hit->witness) << ")";
    }
    text << '\n';
  };
  if (want("p-vex")) pattern_part("p-vex", eleven_p_patterns());
  if (want("q-vex")) {
    bool v = is_q_vexillary(y, VexMethod::vexillary);
    out["q-vex"] = {{"value", v}};
    text << "q-vex: " << (v ? "true" : "false");
    if (!v) {
      auto hit = first_pattern_hit(y, five_q_patterns());
      if (hit) {
        out["q-vex"]["witness"] = {{"pattern", format_cycles(hit->pattern.perm())},
                                   {"positions", hit->witness}};
        text << " (contains " << format_cycles(hit->pattern.perm()) << " at " << set_text(hit->witness) << ")";
      }
    }
    text << '\n';
  }
  if (want("i-grass")) {
    auto d = i_grassmannian_data(y);
    out["i-grass"] = {{"value", d.has_value()}};
    text << "i-grass: " << (d ? "true" : "false");
    if (d) {
      out["i-grass"]["phi"] = d->phi;
      out["i-grass"]["n"] = d->n;
      out["i-grass"]["shape"] = i_grassmannian_shape(*d).parts();
      text << " (phi=" << set_text(d->phi) << ", n=" << d->n << ", shape " << to_string(i_grassmannian_shape(*d))
           << ")";
    }
    text << '\n';
  }
  if (want("dominant")) {
    bool v = y.perm().in_s_infinity() && is_dominant(y);
    out["dominant"] = {{"value", v}};
    text << "dominant: " << (v ? "true" : "false") << '\n';
  }
  if (out.size() == 2) throw UsageError("unknown property " + property);
  if (json_out(o)) std::cout << out.dump() << '\n';
  else std::cout << text.str();
}

struct SweepResult {
  std::string what;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::optional<std::string> witness;
};

int report(const SweepResult& r, const Options& o) {
  bool ok = r.passed == r.total;
  if (json_out(o)) {
    json out = {{"version", 1}, {"check", r.what}, {"total", r.total}, {"passed", r.passed}, {"ok", ok}};
    if (r.witness) out["witness"] = *r.witness;
    std::cout << out.dump() << '\n';
  } else {
    std::cout << r.what << ": " << r.passed << "/" << r.total << (ok ? " pass" : " FAIL") << '\n';
    if (r.witness) std::cout << "witness: " << *r.witness << '\n';
  }
  return ok ? 0 : kExitFalsified;
}

// Runs check over items; the witness is the first failing item in input order.
template <class T>
SweepResult sweep(const std::string& what, const std::vector<T>& items,
                  const std::function<bool(const T&)>& check, const std::function<std::string(const T&)>& name,
                  int jobs) {
  auto results = parallel_map(
      items,
      [&](const T& item) -> std::optional<std::string> {
        try {
          if (check(item)) return std::nullopt;
          return name(item);
        } catch (const Falsification& e) {
          return name(item) + " (" + e.what() + ")";
        }
      },
      jobs);
  SweepResult r{what, items.size(), 0, std::nullopt};
  for (const auto& res : results) {
    if (!res) ++r.passed;
    else if (!r.witness) r.witness = *res;
  }
  return r;
}

std::string cyc(const Involution& y) { return format_cycles(y.perm()); }

int cmd_verify(const std::string& what, const std::string& range, bool every_phi, const std::string& phi_text,
               const Options& o) {
  std::vector<int> ns = parse_range(range);
  SweepResult total{what, 0, 0, std::nullopt};
  auto merge = [&](const SweepResult& r) {
    total.total += r.total;
    total.passed += r.passed;
    if (!total.witness && r.witness) total.witness = r.witness;
  };
  for (int n : ns) {
    if (what == "pfaffian") {
      std::vector<std::vector<int>> phis;
      if (every_phi) phis = all_phi(n);
      else if (!phi_text.empty()) phis.push_back(parse_int_list(phi_text));
      else throw UsageError("verify pfaffian needs --all-phi or --phi");
      merge(sweep<std::vector<int>>(
          what, phis, [n](const std::vector<int>& phi) { return verify_pfaffian_theorem(phi, n); },
          [n](const std::vector<int>& phi) { return "phi=" + set_text(phi) + " n=" + std::to_string(n); },
          o.jobs));
    } else if (what == "transition") {
      struct Case {
        Involution y;
        int p, q;
      };
      std::vector<Case> cases;
      // Every cycle (p,q) of y, fixed points included, plus the first fixed point past n.
      for (const Involution& y : all_involutions(n))
        for (auto [p, q] : cycles(y, 1, n + 1)) cases.push_back({y, p, q});
      merge(sweep<Case>(
          what, cases, [](const Case& c) { return transition_identity_check(c.y, c.p, c.q); },
          [](const Case& c) {
            return "y=" + cyc(c.y) + " (p,q)=(" + std::to_string(c.p) + "," + std::to_string(c.q) + ")";
          },
          o.jobs));
    } else if (what == "triangularity") {
      merge(sweep<Involution>(
          what, all_involutions(n), [](const Involution& y) { return triangularity_certificate(y).ok(); }, cyc,
          o.jobs));
    } else if (what == "insertion-agreement") {
      std::vector<Involution> ys;
      for (const Involution& y : all_involutions(n))
        if (inv_length(y) <= o.guard) ys.push_back(y);
      int guard = o.guard;
      merge(sweep<Involution>(
          what, ys, [guard](const Involution& y) { return beta_coefficients(y, guard) == expand_Fhat(y); }, cyc,
          o.jobs));
    } else {
      throw UsageError("unknown check " + what);
    }
  }
  return report(total, o);
}

void cmd_count(const std::string& what, const std::string& range, const Options& o) {
  std::vector<int> ns = parse_range(range);
  std::vector<std::string> values;
  for (int n : ns) {
    std::uint64_t c = 0;
    if (what == "r") {
      c = count_reduced_words(Permutation::longest(n));
    } else if (what == "rhat") {
      c = count_involution_words(Involution::longest(n));
    } else if (what == "g" || what == "v") {
      if (n > 10) throw GuardExceeded("involution sweeps are limited to n <= 10");
      for (const Involution& y : all_involutions(n))
        c += what == "g" ? is_i_grassmannian(y) : is_p_vexillary(y);
    } else {
      throw UsageError("unknown sequence " + what + " (r, rhat, g, v)");
    }
    values.push_back(std::to_string(c));
  }
  if (json_out(o)) {
    json v = json::array();
    for (const auto& s : values) v.push_back(json::parse(s));
    std::cout << json{{"version", 1}, {"sequence", what}, {"n", ns}, {"values", v}}.dump() << '\n';
  } else {
    for (std::size_t k = 0; k < values.size(); ++k) std::cout << (k ? " " : "") << values[k];
    std::cout << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert polynomials, involution Stanley symmetric functions and Schur P-expansions"};
  app.require_subcommand(1);
  Options o;
  if (const char* env = std::getenv("INVSCHUB_FORMAT")) o.format = env;
  app.add_option("--notation", o.notation, "Input notation: auto, one-line, cycles, word")->capture_default_str();
  app.add_option("--format", o.format, "Output format: text or json (default from INVSCHUB_FORMAT)")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--width", o.width, "Truncate to x_1..x_width");
  app.add_option("--guard", o.guard, "Largest inv_length for word enumeration")->capture_default_str();
  app.add_option("--support-guard", o.support_guard, "Largest support for trees")->capture_default_str();
  app.add_option("--jobs", o.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  app.fallthrough();

  std::string elem, method = "recursion", basis = "P", route = "tree", kind = "involution", exp = "text",
                    mode = "sh", property = "all", what, range = "1..5", phi;
  bool trace = false, all = false;

  auto* s_schub = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
  s_schub->add_option("element", elem)->required();
  auto* s_inv = app.add_subcommand("inv-schubert", "Involution Schubert polynomial");
  s_inv->add_option("element", elem)->required();
  s_inv->add_option("--method", method)->check(CLI::IsMember({"recursion", "atoms"}))->capture_default_str();
  auto* s_exp = app.add_subcommand("expand-fhat", "Schur P- or Q-expansion of F-hat");
  s_exp->add_option("element", elem)->required();
  s_exp->add_option("--basis", basis)->check(CLI::IsMember({"P", "Q"}))->capture_default_str();
  s_exp->add_option("--route", route)
      ->check(CLI::IsMember({"tree", "beta", "words", "truncation"}))
      ->capture_default_str();
  auto* s_tree = app.add_subcommand("ls-tree", "Lascoux-Schutzenberger tree");
  s_tree->add_option("element", elem)->required();
  s_tree->add_option("--kind", kind)->check(CLI::IsMember({"classical", "involution"}))->capture_default_str();
  s_tree->add_option("--export", exp)->check(CLI::IsMember({"text", "edges"}))->capture_default_str();
  auto* s_ins = app.add_subcommand("insert", "Shifted Hecke or involution Coxeter-Knuth insertion");
  s_ins->add_option("word", elem)->required();
  s_ins->add_option("--mode", mode)->check(CLI::IsMember({"sh", "ick"}))->capture_default_str();
  s_ins->add_flag("--trace", trace, "Print every step");
  auto* s_cls = app.add_subcommand("classify", "Vexillarity, I-Grassmannian and dominance tests");
  s_cls->add_option("element", elem)->required();
  s_cls->add_option("--property", property)
      ->check(CLI::IsMember({"all", "p-vex", "q-vex", "i-grass", "dominant"}))
      ->capture_default_str();
  auto* s_ver = app.add_subcommand("verify", "Sweep a theorem over a range of n");
  s_ver->add_option("check", what, "pfaffian, transition, triangularity, insertion-agreement")
      ->required()
      ->check(CLI::IsMember({"pfaffian", "transition", "triangularity", "insertion-agreement"}));
  s_ver->add_option("--n", range, "N or A..B")->capture_default_str();
  s_ver->add_flag("--all-phi", all, "Every phi for the Pfaffian check");
  s_ver->add_option("--phi", phi, "One phi such as 1,2,3");
  auto* s_cnt = app.add_subcommand("count", "Integer sequences");
  s_cnt->add_option("sequence", what, "r, rhat, g, v")->required();
  s_cnt->add_option("range", range, "N or A..B")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (o.guard < 1 || o.support_guard < 1) {
    std::cerr << "error: guards must be positive\n";
    return kExitUsage;
  }

  try {
    if (*s_schub) cmd_schubert(elem, o);
    else if (*s_inv) cmd_inv_schubert(elem, method, o);
    else if (*s_exp) cmd_expand(elem, basis, route, o);
    else if (*s_tree) cmd_ls_tree(elem, kind, exp, o);
    else if (*s_ins) cmd_insert(elem, mode, trace, o);
    else if (*s_cls) cmd_classify(elem, property, o);
    else if (*s_ver) return cmd_verify(what, range, all, phi, o);
    else if (*s_cnt) cmd_count(what, range, o);
  } catch (const GuardExceeded& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return kExitGuard;
  } catch (const Falsification& e) {
    std::cerr << "falsified: " << e.what() << '\n';
    return kExitFalsified;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const NotInSpan& e) {
    std::cerr << "falsified: " << e.what() << '\n';
    return kExitFalsified;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
