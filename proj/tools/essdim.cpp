// Command-line front end. Every subcommand builds a JSON document and a text
// rendering of the same data; --json selects which one is printed.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "essdim/clifford.hpp"
#include "essdim/edim.hpp"
#include "essdim/error.hpp"
#include "essdim/group.hpp"
#include "essdim/parse.hpp"
#include "essdim/repmin.hpp"
#include "essdim/symplectic.hpp"
#include "essdim/verify.hpp"
#include "essdim/witt.hpp"
#include "json.hpp"

using namespace essdim;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Output {
  json doc;
  std::string text;
  bool ok = true;  // false => exit code 1
};

[[noreturn]] void usage(const std::string& msg) { fail(ErrorCode::InvalidArgument, msg); }

json ext(std::int64_t v) {
  if (v == edim::kPosInf || v == edim::kNegInf) return edim::ext_to_string(v);
  return v;
}

json u64_array(const std::vector<std::uint64_t>& v) { return json(v); }

std::string join(const std::vector<std::uint64_t>& v, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::uint64_t prime_for(const group::FiniteGroup& G, std::uint64_t requested) {
  if (requested) return requested;
  const auto p = infer_prime(G);
  if (!p) usage("group is not a nontrivial p-group; pass --p");
  return p;
}

// ---------------------------------------------------------------- group

Output cmd_group(const std::string& spec) {
  const auto G = parse_group_spec(spec);
  const auto Z = group::center(G);
  const auto D = group::derived_subgroup(G);
  const auto zinv = group::abelian_invariants(Z).invariant_factors;
  const auto p = infer_prime(G);
  Output out;
  out.doc["command"] = "group";
  out.doc["spec"] = spec;
  out.doc["order"] = G.order();
  out.doc["abelian"] = G.is_abelian();
  out.doc["exponent"] = group::exponent(G);
  out.doc["prime"] = p ? json(p) : json(nullptr);
  out.doc["center"] = {{"order", Z.order()}, {"invariants", u64_array(zinv)}};
  out.doc["derived"] = {{"order", D.order()}, {"cyclic", group::abelian_invariants(D).rank() <= 1}};
  out.doc["theorem_hypothesis"] = p && group::is_theorem_hypothesis(G, p);
  if (G.is_abelian()) out.doc["abelian_invariants"] = u64_array(group::abelian_invariants(G).invariant_factors);

  std::ostringstream os;
  os << "group " << spec << "\n"
     << "  order        " << G.order() << "\n"
     << "  exponent     " << group::exponent(G) << "\n"
     << "  p-group      " << (p ? "yes, p = " + std::to_string(p) : std::string("no")) << "\n"
     << "  center       order " << Z.order() << ", invariants [" << join(zinv) << "]\n"
     << "  derived      order " << D.order() << "\n"
     << "  hypothesis   " << (out.doc["theorem_hypothesis"].get<bool>() ? "holds" : "fails")
     << " ([G,G] central and cyclic, G a p-group)\n";
  if (G.is_abelian()) os << "  abelian      [" << join(group::abelian_invariants(G).invariant_factors) << "]\n";
  out.text = os.str();
  return out;
}

// ---------------------------------------------------------------- symplectic

Output cmd_symplectic(const std::string& spec, std::uint64_t p_req) {
  const auto G = parse_group_spec(spec);
  const auto p = prime_for(G, p_req);
  const auto M = symplectic::commutator_form(G, p);
  const auto D = symplectic::symplectic_basis(M);
  const auto violation = symplectic::check_decomposition(M, D);
  const auto L = symplectic::lagrangian(M, D);
  Output out;
  out.ok = !violation;
  out.doc["command"] = "symplectic";
  out.doc["spec"] = spec;
  out.doc["p"] = p;
  out.doc["quotient_order"] = M.A.order();
  out.doc["commutator_order"] = M.n;
  out.doc["invariant_factors"] = u64_array(D.d);
  json pairs = json::array();
  for (auto [a, b] : D.pairs) pairs.push_back({G.label(M.lift[a]), G.label(M.lift[b])});
  out.doc["pairs"] = pairs;
  out.doc["sqrt_order"] = symplectic::sqrt_order(M, D);
  out.doc["lagrangian_order"] = L.order();
  out.doc["verified"] = !violation;
  if (violation) out.doc["violation"] = *violation;

  std::ostringstream os;
  os << "symplectic module of " << spec << " (p = " << p << ")\n"
     << "  |G/C(G)| = " << M.A.order() << ", |[G,G]| = " << M.n << "\n"
     << "  d = [" << join(D.d) << "], sqrt|G/C(G)| = " << symplectic::sqrt_order(M, D) << "\n";
  for (std::size_t i = 0; i < D.pairs.size(); ++i)
    os << "  pair " << i + 1 << ": " << G.label(M.lift[D.pairs[i].first]) << ", " << G.label(M.lift[D.pairs[i].second])
       << "  (order " << D.d[i] << ")\n";
  os << "  Lagrangian order " << L.order() << "\n"
     << "  properties (a)-(e): " << (violation ? "VIOLATED: " + *violation : std::string("verified")) << "\n";
  out.text = os.str();
  return out;
}

// ---------------------------------------------------------------- repmin

Output cmd_repmin(const std::string& spec, std::uint64_t p_req, bool show_matrices) {
  const auto G = parse_group_spec(spec);
  const auto p = prime_for(G, p_req);
  const auto rho = repmin::minimal_faithful_rep(G, p);
  const bool hom = repmin::is_homomorphism(rho, G);
  const bool faithful = repmin::rep_kernel(rho, G).is_trivial();
  const auto formula = repmin::formula_degree(G, p);
  Output out;
  out.ok = hom && faithful && rho.degree == formula;
  out.doc["command"] = "repmin";
  out.doc["spec"] = spec;
  out.doc["p"] = p;
  out.doc["degree"] = rho.degree;
  out.doc["formula_degree"] = formula;
  out.doc["root_order"] = rho.e;
  out.doc["faithful"] = faithful;
  out.doc["homomorphism"] = hom;
  std::ostringstream os;
  os << "minimal faithful representation of " << spec << " (p = " << p << ")\n"
     << "  degree " << rho.degree << " (formula " << formula << "), entries in mu_" << rho.e << "\n"
     << "  homomorphism " << (hom ? "yes" : "NO") << ", faithful " << (faithful ? "yes" : "NO") << "\n";
  if (show_matrices) {
    json gens = json::array();
    for (auto g : group::generating_set(G)) {
      const auto& m = rho.images[g];
      gens.push_back({{"element", G.label(g)}, {"permutation", m.perm}, {"exponents", m.exponents}});
      os << "  " << G.label(g) << ": perm [" << join(std::vector<std::uint64_t>(m.perm.begin(), m.perm.end()))
         << "], exponents [" << join(m.exponents) << "]\n";
    }
    out.doc["generators"] = gens;
  }
  out.text = os.str();
  return out;
}

// ---------------------------------------------------------------- clifford

Output cmd_clifford(unsigned n, bool full, const std::vector<std::string>& mul) {
  Output out;
  out.doc["command"] = "clifford";
  out.doc["n"] = n;
  out.doc["even_only"] = !full;
  std::ostringstream os;
  os << "Clifford group G_" << n << (full ? " (all subsets)" : " (even subsets)") << "\n";
  if (mul.size() == 2) {
    auto parse_subset = [](const std::string& s) {
      clifford::SignedSubset x;
      std::string body = s;
      if (!body.empty() && body[0] == '-') {
        x.sign = -1;
        body = body.substr(1);
      }
      std::stringstream ss(body);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) {
          try {
            x.indices.push_back(static_cast<unsigned>(std::stoul(tok)));
          } catch (const std::exception&) {
            fail(ErrorCode::ParseError, "bad index '" + tok + "' in '" + s + "'");
          }
        }
      return x;
    };
    const auto x = parse_subset(mul[0]), y = parse_subset(mul[1]);
    const auto z = clifford::clifford_mul(x, y, n);
    out.doc["product"] = {{"x", clifford::to_string(x)}, {"y", clifford::to_string(y)}, {"xy", clifford::to_string(z)}};
    os << "  " << clifford::to_string(x) << " * " << clifford::to_string(y) << " = " << clifford::to_string(z) << "\n";
  } else if (!mul.empty()) {
    usage("--mul takes two subsets");
  }
  const std::size_t order = std::size_t{1} << (full ? n + 1 : n);
  out.doc["order"] = order;
  os << "  order " << order << "\n";
  if (!full) {
    out.doc["center_type"] = std::string(clifford::to_string(clifford::gamma_center_type(n)));
    out.doc["ed_closed_form"] = clifford::ed_gamma(n);
    os << "  center " << clifford::to_string(clifford::gamma_center_type(n)) << "\n"
       << "  ed (closed form) " << clifford::ed_gamma(n) << "\n";
  }
  if (order <= group::FiniteGroup::kMaxOrder) {
    const auto G = clifford::gamma_group(n, !full);
    edim::FieldProfile f;
    f.root_level[2] = 2;
    const auto b = edim::ed_pgroup(G, 2, f);
    out.doc["ed_table"] = ext(b.lower);
    out.doc["center_order"] = group::center(G).order();
    os << "  ed (from the table, zeta_4 in k) " << edim::to_string(b) << "\n";
    if (!full) out.ok = b.lower == static_cast<std::int64_t>(clifford::ed_gamma(n));
  }
  out.text = os.str();
  return out;
}

// ---------------------------------------------------------------- witt

struct WittArgs {
  std::string form;
  int check_I = 0;
  int decompose = 0;
  unsigned generic_qn = 0;
  unsigned pfister3 = 0;
};

json pfister_json(const witt::PfisterExpr& e) {
  json terms = json::array();
  for (const auto& t : e.terms) {
    json slots = json::array();
    for (const auto& s : t.slots) slots.push_back(witt::to_string(s));
    terms.push_back({{"sign", t.sign}, {"slots", slots}});
  }
  return terms;
}

Output cmd_witt(const WittArgs& a) {
  using namespace witt;
  Output out;
  out.doc["command"] = "witt";
  std::ostringstream os;
  if (a.form.empty() && (a.check_I || a.decompose)) usage("--check-I and --decompose need --form");
  if (a.form.empty() && !a.generic_qn && !a.pfister3) usage("nothing to do: pass --form, --generic-qn or --pfister3-bound");
  if (!a.form.empty()) {
    const QForm q = parse_form(a.form);
    const auto c = hasse_witt(q);
    json ram = json::array();
    std::string ram_text;
    for (Place v : c.ramified_places()) {
      ram.push_back(place_name(v));
      ram_text += (ram_text.empty() ? "" : ", ") + place_name(v);
    }
    json form;
    form["form"] = to_string(q);
    form["dim"] = q.dim();
    form["signature"] = q.signature();
    form["signed_det"] = to_string(signed_det(q));
    form["hasse_witt_ramified"] = ram;
    json membership;
    for (int k = 1; k <= 3; ++k) membership[std::to_string(k)] = in_power_I(q, k);
    form["in_I"] = membership;
    os << std::boolalpha << "form " << to_string(q) << "\n"
       << "  dim " << q.dim() << ", signature " << q.signature() << ", signed det " << to_string(signed_det(q)) << "\n"
       << "  Hasse-Witt invariant ramified at {" << ram_text << "}\n"
       << "  in I: " << in_power_I(q, 1) << ", I^2: " << in_power_I(q, 2) << ", I^3: " << in_power_I(q, 3) << "\n";
    if (a.check_I) {
      if (a.check_I < 1 || a.check_I > 3) usage("--check-I takes 1, 2 or 3");
      form["check_I"] = {{"a", a.check_I}, {"member", in_power_I(q, a.check_I)}};
      os << "  check I^" << a.check_I << ": " << (in_power_I(q, a.check_I) ? "member" : "not a member") << "\n";
    }
    if (a.decompose) {
      if (a.decompose != 1 && a.decompose != 2) usage("--decompose takes 1 or 2");
      const auto e = a.decompose == 1 ? pfister_decompose_1(q) : pfister_decompose_2(q);
      const bool verified = witt_equivalent(e.expand(), q);
      out.ok = verified;
      form["decomposition"] = {{"fold", e.fold}, {"terms", pfister_json(e)}, {"term_count", e.terms.size()}, {"verified", verified}};
      os << "  " << a.decompose << "-fold Pfister decomposition (" << e.terms.size() << " terms): " << to_string(e) << "\n"
         << "  Witt equivalent to the form: " << (verified ? "yes" : "NO") << "\n";
    }
    out.doc["form"] = form;
  }
  if (a.generic_qn) {
    const FormalForm q = generic_qn(a.generic_qn);
    json entries = json::array();
    for (auto e : q.entries) entries.push_back(to_string(e));
    const auto diff = symbol_difference(formal_hasse_witt(q), formal_quaternion_product(q.pairs));
    bool only_minus_one = true;
    for (auto [u, v] : diff) only_minus_one = only_minus_one && u == 0;
    out.ok = out.ok && only_minus_one;
    out.doc["generic_qn"] = {{"n", a.generic_qn},
                             {"entries", entries},
                             {"signed_det", to_string(formal_signed_det(q))},
                             {"hasse_witt_matches_up_to_minus_one_symbols", only_minus_one}};
    os << "generic q_" << a.generic_qn << " = " << to_string(q) << "\n"
       << "  signed det " << to_string(formal_signed_det(q)) << "\n"
       << "  c(q) = prod (a_i, b_i) modulo symbols (-1, x): " << (only_minus_one ? "yes" : "NO") << "\n";
  }
  if (a.pfister3) {
    const auto b = pfister3_lower_bound(a.pfister3);
    out.doc["pfister3_bound"] = {{"n", a.pfister3}, {"value", to_string(b)}, {"rational", b.is_rational()}, {"ceiling", b.ceiling}};
    os << "3-Pfister number lower bound for n = " << a.pfister3 << ": " << to_string(b) << " (ceiling " << b.ceiling
       << ")\n";
  }
  out.text = os.str();
  return out;
}

// ---------------------------------------------------------------- ed

struct EdArgs {
  std::string group, field, cyclic, dihedral, semidirect, jly, mgn, table;
  unsigned spin = 0, pin = 0, hspin = 0, hyperelliptic = 0;
  std::uint64_t p = 0;
};

// "p=2,m=5" -> map
std::map<std::string, std::uint64_t> keyvals(const std::string& s, const std::vector<std::string>& keys) {
  std::map<std::string, std::uint64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) fail(ErrorCode::ParseError, "expected key=value in '" + s + "'");
    const std::string k = tok.substr(0, eq);
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) fail(ErrorCode::ParseError, "unknown key '" + k + "' in '" + s + "'");
    try {
      std::size_t used = 0;
      out[k] = std::stoull(tok.substr(eq + 1), &used);
      if (used != tok.size() - eq - 1) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad number in '" + tok + "'");
    }
  }
  for (const auto& k : keys)
    if (!out.count(k)) fail(ErrorCode::ParseError, "missing '" + k + "' in '" + s + "'");
  return out;
}

json bound_json(const edim::EdBound& b) {
  json prov = json::array();
  for (const auto& [endpoint, cite] : b.provenance) prov.push_back({{"endpoint", endpoint}, {"citation", cite}});
  return {{"lower", ext(b.lower)}, {"upper", ext(b.upper)}, {"exact", b.is_exact()}, {"provenance", prov}};
}

std::string bound_text(const edim::EdBound& b) {
  std::string s = "  ed = " + edim::to_string(b) + "\n";
  for (const auto& [endpoint, cite] : b.provenance) s += "    " + endpoint + ": " + cite + "\n";
  return s;
}

Output ed_table(const std::string& which) {
  Output out;
  out.doc["command"] = "ed";
  std::ostringstream os;
  json rows = json::array();
  if (which == "spin") {
    out.doc["query"] = "table spin";
    os << "   n   interval      Rost\n";
    for (unsigned n = 3; n <= 20; ++n) {
      const auto [lo, hi] = edim::spin_interval_raw(n);
      const auto v = edim::rost_value(n);
      const auto b = edim::ed_spin(n);
      rows.push_back({{"n", n}, {"raw_lower", lo}, {"raw_upper", hi}, {"rost", v ? json(*v) : json(nullptr)},
                      {"lower", ext(b.lower)}, {"upper", ext(b.upper)}});
      char line[96];
      std::snprintf(line, sizeof line, "  %2u   [%5lld, %4lld]  %s\n", n, static_cast<long long>(lo), static_cast<long long>(hi),
                    v ? std::to_string(*v).c_str() : "-");
      os << line;
    }
  } else if (which == "curves") {
    out.doc["query"] = "table curves";
    os << "  (g,n)   ed M_{g,n}\n";
    for (unsigned g = 0; g <= 3; ++g)
      for (unsigned n = 0; n <= 3; ++n) {
        const auto b = edim::ed_mgn(g, n);
        rows.push_back({{"g", g}, {"n", n}, {"value", ext(b.lower)}});
        os << "  (" << g << "," << n << ")   " << edim::ext_to_string(b.lower) << "\n";
      }
  } else if (which == "hyperelliptic") {
    out.doc["query"] = "table hyperelliptic";
    os << "   g   ed H_g\n";
    for (unsigned g = 2; g <= 20; ++g) {
      const auto b = edim::ed_hyperelliptic(g);
      rows.push_back({{"g", g}, {"value", ext(b.lower)}});
      os << "  " << (g < 10 ? " " : "") << g << "   " << b.lower << "\n";
    }
  } else {
    usage("--table takes spin, curves or hyperelliptic");
  }
  out.doc["rows"] = rows;
  out.text = os.str();
  return out;
}

Output cmd_ed(const EdArgs& a) {
  const int chosen = !a.group.empty() + !a.cyclic.empty() + !a.dihedral.empty() + !a.semidirect.empty() + !a.jly.empty() +
                     !a.mgn.empty() + !a.table.empty() + (a.spin > 0) + (a.pin > 0) + (a.hspin > 0) + (a.hyperelliptic > 0);
  if (chosen != 1) usage("ed needs exactly one of --group, --cyclic, --dihedral, --semidirect, --jly, --spin, --pin, --hspin, --mgn, --hyperelliptic, --table");
  if (!a.table.empty()) return ed_table(a.table);
  const edim::FieldProfile field = parse_field_profile(a.field);
  Output out;
  out.doc["command"] = "ed";
  std::ostringstream os;
  edim::EdBound b;
  std::string query;
  if (!a.group.empty()) {
    const auto G = parse_group_spec(a.group);
    const auto p = prime_for(G, a.p);
    query = "group " + a.group;
    b = edim::ed_pgroup(G, p, field);
    out.doc["ind_lower_bound"] = edim::ed_lower_ind(G, p);
  } else if (!a.cyclic.empty()) {
    auto kv = keyvals(a.cyclic, {"p", "m"});
    query = "cyclic " + a.cyclic;
    b = edim::ed_cyclic(kv["p"], static_cast<unsigned>(kv["m"]), field);
  } else if (!a.dihedral.empty()) {
    auto kv = keyvals(a.dihedral, {"p", "m"});
    query = "dihedral " + a.dihedral;
    b = edim::ed_dihedral(kv["p"], static_cast<unsigned>(kv["m"]), field);
  } else if (!a.semidirect.empty()) {
    auto kv = keyvals(a.semidirect, {"p", "r", "s"});
    query = "semidirect " + a.semidirect;
    b = edim::ed_semidirect(kv["p"], static_cast<unsigned>(kv["r"]), static_cast<unsigned>(kv["s"]), field);
  } else if (!a.jly.empty()) {
    auto kv = keyvals(a.jly, {"p", "n"});
    const auto gap = edim::jly_gap(kv["p"], static_cast<unsigned>(kv["n"]), field);
    out.doc["query"] = "jly " + a.jly;
    out.doc["upper_G"] = gap.upper_G;
    out.doc["exact_quotient"] = gap.exact_quotient;
    out.doc["table_checked"] = gap.table_checked;
    os << "quotient gap for p = " << kv["p"] << ", n = " << kv["n"] << "\n"
       << "  ed G <= " << gap.upper_G << " (n p), ed G/H = " << gap.exact_quotient << " (p^n)"
       << (gap.table_checked ? ", confirmed on the Cayley table" : "") << "\n";
    out.text = os.str();
    return out;
  } else if (a.spin) {
    query = "Spin_" + std::to_string(a.spin);
    b = edim::ed_spin(a.spin);
  } else if (a.pin) {
    query = "Pin_" + std::to_string(a.pin);
    b = edim::ed_pin(a.pin);
  } else if (a.hspin) {
    query = "HSpin_" + std::to_string(a.hspin);
    b = edim::ed_hspin(a.hspin);
  } else if (!a.mgn.empty()) {
    const auto comma = a.mgn.find(',');
    if (comma == std::string::npos) fail(ErrorCode::ParseError, "--mgn takes g,n");
    unsigned g = 0, n = 0;
    try {
      g = static_cast<unsigned>(std::stoul(a.mgn.substr(0, comma)));
      n = static_cast<unsigned>(std::stoul(a.mgn.substr(comma + 1)));
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "--mgn takes g,n");
    }
    query = "M_{" + std::to_string(g) + "," + std::to_string(n) + "}";
    b = edim::ed_mgn(g, n);
  } else {
    query = "H_" + std::to_string(a.hyperelliptic);
    b = edim::ed_hyperelliptic(a.hyperelliptic);
  }
  out.doc["query"] = query;
  out.doc["field"] = edim::to_string(field);
  const json bj = bound_json(b);
  for (const auto& [k, v] : bj.items()) out.doc[k] = v;
  os << query << " over " << edim::to_string(field) << "\n" << bound_text(b);
  out.text = os.str();
  return out;
}

// ---------------------------------------------------------------- verify

Output cmd_verify(const std::string& suite, std::uint64_t seed) {
  const auto reports = verify::run(suite, seed);
  Output out;
  out.doc = json::parse(verify::render_json(reports, seed));
  out.text = verify::render_text(reports, seed);
  out.ok = out.doc["ok"].get<bool>();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Essential dimension toolkit: p-groups, Clifford groups, quadratic forms and ed bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::uint64_t seed = verify::kDefaultSeed;
  std::string out_path;
  app.add_flag("--json", as_json, "Print JSON instead of text");
  app.add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--out", out_path, "Write output to this file");

  std::string group_spec;
  std::uint64_t p = 0;
  auto* group_cmd = app.add_subcommand("group", "Structure of a group");
  group_cmd->add_option("spec,--spec", group_spec, "Group spec, e.g. extraspecial:p=3,m=1,exp=p")->required();

  auto* sym_cmd = app.add_subcommand("symplectic", "Commutator form and its symplectic basis");
  sym_cmd->add_option("spec,--spec", group_spec, "Group spec")->required();
  sym_cmd->add_option("--p", p, "Prime (inferred by default)");

  bool matrices = false;
  auto* rep_cmd = app.add_subcommand("repmin", "Minimal faithful representation");
  rep_cmd->add_option("spec,--spec", group_spec, "Group spec")->required();
  rep_cmd->add_option("--p", p, "Prime (inferred by default)");
  rep_cmd->add_flag("--matrices", matrices, "Print the images of a generating set");

  unsigned n = 0;
  bool full = false;
  std::vector<std::string> mul;
  auto* cl_cmd = app.add_subcommand("clifford", "Clifford groups G_n");
  cl_cmd->add_option("--n", n, "Number of generators e_1..e_n")->required()->check(CLI::Range(1u, 64u));
  cl_cmd->add_flag("--full", full, "All subsets instead of even ones");
  cl_cmd->add_option("--mul", mul, "Multiply two signed subsets, e.g. --mul 1,2 -2,3")->expected(2);

  WittArgs wa;
  auto* witt_cmd = app.add_subcommand("witt", "Quadratic forms over Q");
  witt_cmd->add_option("--form", wa.form, "Diagonal entries, e.g. \"2,3,6,1\"");
  witt_cmd->add_option("--check-I", wa.check_I, "Test membership in I^a (a = 1, 2, 3)");
  witt_cmd->add_option("--decompose", wa.decompose, "Write the form as a sum of 1- or 2-fold Pfister forms");
  witt_cmd->add_option("--generic-qn", wa.generic_qn, "Show the generic form q_n");
  witt_cmd->add_option("--pfister3-bound", wa.pfister3, "Lower bound for the 3-Pfister number at even n");

  EdArgs ea;
  auto* ed_cmd = app.add_subcommand("ed", "Essential dimension bounds");
  ed_cmd->add_option("--group", ea.group, "p-group spec");
  ed_cmd->add_option("--p", ea.p, "Prime for --group (inferred by default)");
  ed_cmd->add_option("--field", ea.field, "Field profile, e.g. \"char=0;level(3)=2\"");
  ed_cmd->add_option("--cyclic", ea.cyclic, "Cyclic group of order p^m: p=P,m=M");
  ed_cmd->add_option("--dihedral", ea.dihedral, "Dihedral group of order 2p^m: p=P,m=M");
  ed_cmd->add_option("--semidirect", ea.semidirect, "C_{p^r} acting on C_{p^s}: p=P,r=R,s=S");
  ed_cmd->add_option("--jly", ea.jly, "Quotient gap family: p=P,n=N");
  ed_cmd->add_option("--spin", ea.spin, "Spin_n");
  ed_cmd->add_option("--pin", ea.pin, "Pin_n");
  ed_cmd->add_option("--hspin", ea.hspin, "Half-spin group HSpin_n (4 | n)");
  ed_cmd->add_option("--mgn", ea.mgn, "Moduli of curves M_{g,n}: g,n");
  ed_cmd->add_option("--hyperelliptic", ea.hyperelliptic, "Hyperelliptic curves of genus g");
  ed_cmd->add_option("--table", ea.table, "Print a table: spin, curves or hyperelliptic");

  std::string suite = "all";
  auto* ver_cmd = app.add_subcommand("verify", "Run verification suites");
  ver_cmd->add_option("suite", suite, "groups, symplectic, repmin, clifford, witt, edim or all")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Output out;
  try {
    if (*group_cmd) out = cmd_group(group_spec);
    else if (*sym_cmd) out = cmd_symplectic(group_spec, p);
    else if (*rep_cmd) out = cmd_repmin(group_spec, p, matrices);
    else if (*cl_cmd) out = cmd_clifford(n, full, mul);
    else if (*witt_cmd) out = cmd_witt(wa);
    else if (*ed_cmd) out = cmd_ed(ea);
    else out = cmd_verify(suite, seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string rendered = as_json ? out.doc.dump(2) + "\n" : out.text;
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    f << rendered;
  }
  return out.ok ? kExitOk : kExitVerifyFailed;
}
