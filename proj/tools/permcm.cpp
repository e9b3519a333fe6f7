#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "permcm/bases.hpp"

using namespace permcm;
using Json = nlohmann::ordered_json;

namespace {

struct Config {
  int degree = 0;
  std::string group;
  std::string poly;
  std::string coeff;
  std::string basis = "cell";
  std::string format = "text";
  std::string order;
  std::size_t budget = 0;
  int jobs = 1;
  std::vector<std::uint32_t> primes;
  std::size_t cap = kDefaultGroupCap;
  bool orbit = false;
  bool topological = false;
};

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3 };

bool json_out(const Config& c) { return c.format == "json"; }

Json chain_json(const Chain& chain) {
  Json out = Json::array();
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) out.push_back(subset_elements(*it));
  return out;
}

Json face_json(const QuotientComplex& k, std::size_t f) {
  Json facets = Json::array();
  const auto& fs = k.facet_set(f);
  for (std::size_t j = 0; j < fs.size(); ++j)
    if (fs.test(j)) facets.push_back(j);
  return Json{{"repr", chain_json(k.faces()[f].repr)}, {"rank_set", k.faces()[f].ranks()}, {"facets", facets}};
}

std::string domain_text(const Config& c, const char* fallback) { return c.coeff.empty() ? fallback : c.coeff; }

PermutationGroup load_group(const Config& c) { return parse_group(c.group, c.degree, c.cap); }

std::string q_string(const mpq_class& q) { return q.get_str(); }

int cmd_grr(const Config& c) {
  auto g = load_group(c);
  auto rr = rr_subgroup(g);
  std::string huffman;
  try {
    huffman = to_string(huffman_classify(g));
  } catch (const Error& e) {
    huffman = e.what();
  }
  if (json_out(c)) {
    std::cout << Json{{"group", serialize_group(g)}, {"order", g.order()}, {"grr", serialize_group(rr.group)},
                      {"grr_order", rr.group.order()}, {"grr_index", rr.index}, {"huffman", huffman}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "group      " << serialize_group(g) << "  (order " << g.order() << ")\n"
              << "G_rr       " << serialize_group(rr.group) << "  (order " << rr.group.order() << ")\n"
              << "index      " << rr.index << "\n"
              << "huffman    " << huffman << "\n";
  }
  return kOk;
}

int cmd_complex(const Config& c) {
  auto k = build_quotient_complex(load_group(c));
  if (json_out(c)) {
    Json faces = Json::array();
    for (std::size_t f = 0; f < k.size(); ++f) faces.push_back(face_json(k, f));
    std::cout << Json{{"degree", c.degree}, {"faces", faces}, {"facets", k.facets()}}.dump(2) << "\n";
    return kOk;
  }
  std::cout << k.size() << " faces, " << k.facets().size() << " facets\n";
  for (std::size_t f = 0; f < k.size(); ++f) {
    const auto& face = k.faces()[f];
    std::string ranks;
    for (int r : face.ranks()) ranks += (ranks.empty() ? "" : ",") + std::to_string(r);
    std::cout << f << "\t" << k.label(f) << "\t{" << ranks << "}\t" << k.facet_set(f).to_string() << "\t"
              << k.chain_monomial(f).to_string() << "\n";
  }
  return kOk;
}

std::vector<std::size_t> faces_by_label(const QuotientComplex& k, const std::string& list) {
  std::vector<std::size_t> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto b = item.find_first_not_of(' '), e = item.find_last_not_of(' ');
    if (b == std::string::npos) continue;
    item = item.substr(b, e - b + 1);
    auto f = k.face_by_label(item);
    if (!f) throw NotAFace("no face labelled '" + item + "'");
    out.push_back(*f);
  }
  return out;
}

std::vector<std::string> labels(const QuotientComplex& k, const std::vector<std::size_t>& faces) {
  std::vector<std::string> out;
  for (auto f : faces) out.push_back(k.label(f));
  return out;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : sep) + s;
  return out;
}

int cmd_shelling(const Config& c) {
  auto k = build_quotient_complex(load_group(c));
  if (!c.order.empty()) {
    auto order = faces_by_label(k, c.order);
    auto check = check_shelling(k, order);
    if (json_out(c)) {
      Json j{{"order", labels(k, order)}, {"accepted", check.ok}};
      if (check.ok) j["minimal_faces"] = labels(k, check.minimal_faces);
      else j["failed_at"] = check.failed_at;
      std::cout << j.dump(2) << "\n";
    } else if (check.ok) {
      std::cout << "accepted; minimal faces: " << join(labels(k, check.minimal_faces), ", ") << "\n";
    } else {
      std::cout << "rejected at position " << check.failed_at << " (" << k.label(order[check.failed_at]) << ")\n";
    }
    return check.ok ? kOk : kMismatch;
  }
  auto search = find_shelling(k, c.budget ? c.budget : default_shelling_budget());
  if (json_out(c)) {
    Json j{{"status", to_string(search.status)}, {"nodes", search.nodes}};
    if (search.shelling) {
      j["facets"] = labels(k, search.shelling->facets);
      j["minimal_faces"] = labels(k, search.shelling->minimal_faces);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_string(search.status) << " after " << search.nodes << " nodes\n";
    if (search.shelling)
      std::cout << "facets:        " << join(labels(k, search.shelling->facets), ", ") << "\n"
                << "minimal faces: " << join(labels(k, search.shelling->minimal_faces), ", ") << "\n";
  }
  if (search.status == SearchStatus::BudgetExceeded) return kBudget;
  return search.shelling ? kOk : kMismatch;
}

int cmd_cellbasis(const Config& c) {
  auto k = build_quotient_complex(load_group(c));
  auto domain = parse_domain(domain_text(c, "q"));
  auto r = greedy_cell_basis(k, domain);
  if (json_out(c)) {
    Json faces = Json::array();
    for (auto f : r.basis.faces) {
      Json fj = face_json(k, f);
      fj["facet_vector"] = k.facet_vector(f);
      faces.push_back(fj);
    }
    Json j{{"ok", r.ok}, {"domain", domain.to_string()}, {"faces", faces}, {"determinant", q_string(r.report.determinant)}};
    if (!r.ok) j["diagnostics"] = r.diagnostics;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (r.ok ? "cell basis" : "no cell basis") << " over " << domain.to_string() << "\n";
    for (auto f : r.basis.faces) std::cout << "  " << k.label(f) << "\t" << k.facet_set(f).to_string() << "\n";
    std::cout << "determinant " << q_string(r.report.determinant) << "\n";
    if (!r.ok) std::cout << r.diagnostics << "\n";
  }
  return r.ok ? kOk : kMismatch;
}

Polynomial load_invariant(const Config& c, const PermutationGroup& g, Domain domain) {
  auto f = parse_polynomial(c.poly, c.degree, domain);
  return c.orbit ? orbit_sum(g, f) : f;
}

Json coefficient_list(const QuotientComplex& k, const std::map<std::size_t, Polynomial>& coeffs) {
  Json out = Json::array();
  for (const auto& [face, p] : coeffs) out.push_back(Json{{"face", chain_json(k.faces()[face].repr)}, {"coeff", p.to_string('s')}});
  return out;
}

void print_coefficients(const QuotientComplex& k, const std::map<std::size_t, Polynomial>& coeffs) {
  for (const auto& [face, p] : coeffs) std::cout << "(" << p.to_string('s') << ") * G[" << k.label(face) << "]\n";
}

int cmd_goebel(const Config& c) {
  auto g = load_group(c);
  auto domain = parse_domain(domain_text(c, "z"));
  auto f = load_invariant(c, g, domain);
  auto k = build_quotient_complex(g);
  auto d = goebel_decompose(k, f);
  if (json_out(c)) std::cout << coefficient_list(k, d.coefficients).dump(2) << "\n";
  else {
    std::cout << f.to_string() << " =\n";
    print_coefficients(k, d.coefficients);
  }
  return kOk;
}

int cmd_represent(const Config& c) {
  auto g = load_group(c);
  auto k = build_quotient_complex(g);
  std::vector<std::size_t> basis;
  Domain domain;
  if (c.basis == "shelling") {
    domain = parse_domain(domain_text(c, "z"));
    auto search = find_shelling(k, c.budget ? c.budget : default_shelling_budget());
    if (search.status == SearchStatus::BudgetExceeded) throw BudgetExceeded("shelling search exceeded its budget");
    if (!search.shelling) throw NotApplicable("the complex has no shelling");
    basis = shelling_basis(k, *search.shelling).faces;
  } else {
    domain = parse_domain(domain_text(c, "q"));
    auto r = greedy_cell_basis(k, domain);
    if (!r.ok) throw NotApplicable("greedy cell basis failed: " + r.diagnostics);
    basis = r.basis.faces;
  }
  auto f = load_invariant(c, g, domain);
  auto rep = represent_on_basis(k, f, basis, domain);
  if (json_out(c)) {
    std::cout << Json{{"basis", labels(k, basis)}, {"coefficients", coefficient_list(k, rep.coefficients)}}.dump(2) << "\n";
  } else {
    std::cout << "basis: " << join(labels(k, basis), ", ") << "\n";
    print_coefficients(k, rep.coefficients);
  }
  return kOk;
}

int cmd_homology(const Config& c) {
  auto k = build_quotient_complex(load_group(c));
  auto h = homology(order_complex(k));
  auto cm = is_cm_complex(k, parse_domain(domain_text(c, "z")));
  if (json_out(c)) {
    Json groups = Json::array();
    for (std::size_t i = 0; i < h.size(); ++i) {
      std::vector<std::string> torsion;
      for (const auto& t : h[i].torsion) torsion.push_back(t.get_str());
      groups.push_back(Json{{"dim", static_cast<int>(i) - 1}, {"free_rank", h[i].free_rank}, {"torsion", torsion}});
    }
    std::cout << Json{{"reduced_homology", groups}, {"cm", cm.cm}}.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < h.size(); ++i)
      std::cout << "H~_" << static_cast<int>(i) - 1 << " = " << h[i].to_string() << "\n";
    std::cout << "Cohen-Macaulay: " << (cm.cm ? "yes" : "no");
    if (cm.witness) std::cout << " (H~_" << cm.witness->dim << " = " << cm.witness->group.to_string() << " on a link)";
    std::cout << "\n";
  }
  return kOk;
}

Json report_json(const CMReport& r) {
  Json algebraic = Json::object();
  for (const auto& [p, v] : r.algebraic)
    algebraic[std::to_string(p)] = Json{{"expected", v.expected}, {"count", v.count}, {"cm", v.cm}};
  Json j{{"group", r.group},         {"order", r.order},     {"grr_index", r.grr_index}, {"primes", r.primes},
         {"prediction", r.prediction}, {"algebraic", algebraic}, {"topological", nullptr},    {"agree", r.agree}};
  if (r.topological) j["topological"] = *r.topological;
  return j;
}

void print_report(const CMReport& r) {
  std::cout << r.group << "  order " << r.order << "  index " << r.grr_index << "  predicted "
            << (r.prediction ? "CM" : "not CM");
  for (const auto& [p, v] : r.algebraic) std::cout << "  p=" << p << ": " << v.count << "/" << v.expected;
  if (r.topological) std::cout << "  topological " << (*r.topological ? "CM" : "not CM");
  std::cout << "  " << (r.agree ? "agree" : "MISMATCH") << "\n";
}

CMReportOptions report_options(const Config& c) {
  CMReportOptions o;
  if (!c.primes.empty()) o.primes = c.primes;
  o.topological = c.topological;
  return o;
}

int cmd_cm(const Config& c) {
  auto r = cm_report(load_group(c), report_options(c));
  if (json_out(c)) std::cout << report_json(r).dump(2) << "\n";
  else print_report(r);
  return r.agree ? kOk : kMismatch;
}

int cmd_survey(const Config& c) {
  auto s = survey(c.degree, report_options(c), c.jobs);
  if (json_out(c)) {
    Json reports = Json::array();
    for (const auto& r : s.reports) reports.push_back(report_json(r));
    std::cout << Json{{"degree", s.n}, {"classes", s.reports.size()}, {"reports", reports}, {"all_agree", s.all_agree}}.dump(2)
              << "\n";
  } else {
    for (const auto& r : s.reports) print_report(r);
    std::cout << s.reports.size() << " classes; " << (s.all_agree ? "everything matched" : "mismatch found") << "\n";
  }
  return s.all_agree ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of permutation groups, quotient complexes and Cohen-Macaulayness"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;

  app.add_option("--degree,-n", c.degree, "number of points n")->check(CLI::Range(1, 16));
  app.add_option("--group,-g", c.group, "generators in cycle notation, e.g. \"(1,2,3,4)(1,3)\"");
  app.add_option("--poly,-p", c.poly, "polynomial in x1..xn");
  app.add_flag("--orbit", c.orbit, "replace the polynomial by the sum of its terms' orbit monomials");
  app.add_option("--coeff", c.coeff, "coefficient domain: z, q or fp:<p>");
  app.add_option("--basis", c.basis, "basis for represent")->check(CLI::IsMember({"shelling", "cell"}));
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--order", c.order, "facet labels separated by ';' to check as a shelling");
  app.add_option("--budget", c.budget, "shelling search node budget");
  app.add_option("--jobs,-j", c.jobs, "parallel subgroups in survey")->check(CLI::PositiveNumber);
  app.add_option("--primes", c.primes, "primes to test instead of those dividing [G:G_rr]")->delimiter(',');
  app.add_option("--cap", c.cap, "group order cap");
  app.add_flag("--topological", c.topological, "also run the link-homology test");

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Config&);
    bool needs_degree;
  };
  const Command commands[] = {
      {"grr", "G_rr, its index and the Huffman class", cmd_grr, true},
      {"complex", "faces of the quotient complex", cmd_complex, true},
      {"shelling", "find a shelling, or check --order", cmd_shelling, true},
      {"cellbasis", "greedy cell basis", cmd_cellbasis, true},
      {"goebel", "decompose an invariant onto special orbit monomials", cmd_goebel, true},
      {"represent", "represent an invariant on a module basis", cmd_represent, true},
      {"homology", "reduced homology and the Cohen-Macaulay test", cmd_homology, true},
      {"cm", "Cohen-Macaulay report", cmd_cm, true},
      {"survey", "cm report for every subgroup class of S_n", cmd_survey, true},
  };
  for (const auto& cmd : commands) app.add_subcommand(cmd.name, cmd.help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    for (const auto& cmd : commands) {
      if (!app.got_subcommand(cmd.name)) continue;
      if (cmd.needs_degree && c.degree == 0) throw CLI::RequiredError("--degree");
      if (c.poly.empty() && (std::string(cmd.name) == "goebel" || std::string(cmd.name) == "represent"))
        throw CLI::RequiredError("--poly");
      return cmd.run(c);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
