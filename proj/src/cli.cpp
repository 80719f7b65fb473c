#include "hilden/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "hilden/artin.hpp"
#include "hilden/braid.hpp"
#include "hilden/dilatation.hpp"
#include "hilden/presentation.hpp"
#include "hilden/traintrack.hpp"

namespace hilden {

namespace {

using nlohmann::json;

json poly_json(const int_poly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) {
    if (c.fits_slong_p())
      coeffs.push_back(c.get_si());
    else
      coeffs.push_back(c.get_str());
  }
  return coeffs;
}

json dilatation_json(const dilatation_result& r) {
  json j{{"strands", r.strands},
         {"polynomial", poly_json(r.polynomial)},
         {"lambda", r.lambda.value},
         {"lambda_bracket", json::array({rational(r.lambda.low).get_d(),
                                         rational(r.lambda.high).get_d()})},
         {"log_lambda", r.log_lambda},
         {"normalized_entropy", r.normalized_entropy}};
  if (r.n)
    j["n"] = *r.n;
  else
    j["n"] = nullptr;
  return j;
}

std::string fmt(double v, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

// the published table truncates, so the text rendering truncates too
std::string trunc5(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(5) << std::trunc(v * 1e5) / 1e5;
  return os.str();
}

struct cli_options {
  std::string format = "text";
  double tol = 1e-12;
  int max_n = 10;
  int genus = 2;
  int strands = 6;
  int n = 0;
};

rational tol_rational(double tol) {
  if (!(tol > 0) || tol > 0.5) throw std::invalid_argument("tolerance must be in (0, 0.5]");
  rational r(tol);
  r.canonicalize();
  return r;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw CLI::ValidationError("--format", "format '" + format + "' not available here");
}

int run_dilatation(const cli_options& o, std::ostream& out) {
  dilatation_result r = dilatation(o.strands, tol_rational(o.tol));
  if (o.format == "json") {
    out << dilatation_json(r).dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "strands,n,lambda,log_lambda,normalized_entropy\n";
    out << r.strands << ',' << (r.n ? std::to_string(*r.n) : "") << ',' << fmt(r.lambda.value)
        << ',' << fmt(r.log_lambda) << ',' << fmt(r.normalized_entropy) << '\n';
  } else {
    out << "strands " << r.strands;
    if (r.n) out << "  (family n = " << *r.n << ")";
    out << '\n';
    out << "polynomial      " << r.polynomial.pretty() << '\n';
    out << "lambda          " << fmt(r.lambda.value, 12) << "  (bracket width "
        << r.lambda.width() << ")\n";
    out << "log lambda      " << fmt(r.log_lambda, 12) << '\n';
    out << "normalized ent  " << fmt(r.normalized_entropy, 12) << '\n';
  }
  return 0;
}

int run_table(const cli_options& o, std::ostream& out) {
  auto rows = reproduce_table(o.max_n);
  auto cell = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json j{{"lambda", r.lambda}, {"normalized_entropy", r.normalized_entropy}};
      j["n"] = r.n ? json(*r.n) : json(nullptr);
      j["strands_high"] = r.strands_high ? json(*r.strands_high) : json(nullptr);
      j["strands_low"] = r.strands_low ? json(*r.strands_low) : json(nullptr);
      arr.push_back(j);
    }
    out << arr.dump(2) << '\n';
  } else if (o.format == "csv") {
    // csv keeps full precision; the text rendering rounds to the published
    // five decimals (which were truncated, so rounding can shift an ulp)
    out << "n,strands_high,strands_low,lambda,normalized_entropy\n";
    for (const auto& r : rows)
      out << cell(r.n) << ',' << cell(r.strands_high) << ',' << cell(r.strands_low) << ','
          << fmt(r.lambda, 12) << ',' << fmt(r.normalized_entropy, 12) << '\n';
  } else {
    out << "   n  high   low  lambda     normalized entropy\n";
    for (const auto& r : rows) {
      out << std::setw(4) << cell(r.n) << ' ' << std::setw(5) << cell(r.strands_high) << ' '
          << std::setw(5) << cell(r.strands_low) << "  " << trunc5(r.lambda) << "    "
          << fmt(r.normalized_entropy) << '\n';
    }
  }
  return 0;
}

int run_convergence(const cli_options& o, std::ostream& out) {
  auto rep = convergence_report(o.max_n);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rep.rows)
      arr.push_back(json{{"n", r.n},
                         {"lambda", r.lambda},
                         {"normalized_entropy", r.normalized_entropy},
                         {"gap", r.gap}});
    json j{{"limit", rep.limit},
           {"gap_strictly_decreasing", rep.gap_strictly_decreasing},
           {"lambda_strictly_decreasing", rep.lambda_strictly_decreasing},
           {"rows", arr}};
    if (rep.first_n_lambda_within_001) j["first_n_lambda_within_0.01"] = *rep.first_n_lambda_within_001;
    out << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "n,lambda,normalized_entropy,gap\n";
    for (const auto& r : rep.rows)
      out << r.n << ',' << fmt(r.lambda, 10) << ',' << fmt(r.normalized_entropy, 10) << ','
          << fmt(r.gap, 10) << '\n';
  } else {
    out << "limit 4*log(kappa) = " << fmt(rep.limit, 10) << '\n';
    for (const auto& r : rep.rows)
      out << "n=" << std::setw(4) << r.n << "  lambda=" << fmt(r.lambda, 10)
          << "  ent=" << fmt(r.normalized_entropy, 10) << "  gap=" << fmt(r.gap, 10) << '\n';
    out << "gap strictly decreasing:    " << (rep.gap_strictly_decreasing ? "yes" : "no") << '\n';
    out << "lambda strictly decreasing: " << (rep.lambda_strictly_decreasing ? "yes" : "no")
        << '\n';
    if (rep.first_n_lambda_within_001)
      out << "lambda - 1 < 0.01 from n = " << *rep.first_n_lambda_within_001 << '\n';
  }
  return 0;
}

int run_matrix(const cli_options& o, bool w6, std::ostream& out) {
  require_format(o.format, {"text", "json"});
  int_matrix m = w6 ? w6_incidence_matrix() : family_incidence_matrix(o.n);
  if (o.format == "json") {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
      json row = json::array();
      for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).get_si());
      rows.push_back(row);
    }
    out << rows.dump() << '\n';
  } else {
    out << m.text_grid();
  }
  return 0;
}

int run_charpoly(const cli_options& o, bool w6, bool closed_form, std::ostream& out) {
  require_format(o.format, {"text", "json"});
  int_poly p;
  if (w6)
    p = char_poly(w6_incidence_matrix());
  else if (closed_form)
    p = family_polynomial(o.n);
  else
    p = char_poly(family_incidence_matrix(o.n));
  if (o.format == "json") {
    out << json{{"degree", p.degree()}, {"coeffs", poly_json(p)}, {"pretty", p.pretty()}}.dump(2)
        << '\n';
  } else {
    out << p.pretty() << '\n' << "coeffs (ascending): " << p.coeff_list() << '\n';
  }
  return 0;
}

int run_validate(const cli_options& o, std::ostream& out) {
  auto rep = validate_family(o.max_n);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rep.rows)
      arr.push_back(json{{"n", r.n},
                         {"dimension", r.dimension},
                         {"charpoly_matches", r.charpoly_matches},
                         {"primitive", r.primitive},
                         {"witness", r.witness}});
    out << json{{"all_pass", rep.all_pass()}, {"rows", arr}}.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "n,dimension,charpoly_matches,primitive,witness\n";
    for (const auto& r : rep.rows)
      out << r.n << ',' << r.dimension << ',' << r.charpoly_matches << ',' << r.primitive << ','
          << r.witness << '\n';
  } else {
    for (const auto& r : rep.rows)
      out << "n=" << std::setw(3) << r.n << "  dim=" << std::setw(4) << r.dimension
          << "  charpoly=" << (r.charpoly_matches ? "ok" : "MISMATCH")
          << "  primitive=" << (r.primitive ? "ok" : "NO") << " (witness " << r.witness << ")\n";
    out << (rep.all_pass() ? "all pass\n" : "FAILURES PRESENT\n");
  }
  return rep.all_pass() ? 0 : 1;
}

int run_prongs(const cli_options& o, std::ostream& out) {
  require_format(o.format, {"text", "json"});
  prong_data_result r = prong_data(o.n);
  if (o.format == "json") {
    out << json{{"punctures", r.puncture_prongs},
                {"interior_three_prongs", r.interior_three_prongs},
                {"euler_poincare_sum", r.euler_poincare_sum()}}
               .dump(2)
        << '\n';
  } else {
    int m = static_cast<int>(r.puncture_prongs.size());
    out << "punctures: " << m - 2 << " with 1 prong, c_" << m - 1 << " with "
        << r.puncture_prongs[m - 2] << ", c_" << m << " with " << r.puncture_prongs[m - 1]
        << '\n';
    out << "interior 3-pronged singularities: " << r.interior_three_prongs << '\n';
    out << "Euler-Poincare sum (should be 4): " << r.euler_poincare_sum() << '\n';
  }
  return 0;
}

int run_presentation(const cli_options& o, std::ostream& out) {
  require_format(o.format, {"text", "json"});
  presentation p = handlebody_presentation(o.genus);
  if (o.format == "json") {
    json gens = json::array();
    for (const auto& g : p.generators) gens.push_back(g.name());
    json rels = json::array();
    for (const auto& rel : p.relators) {
      json word = json::array();
      for (const auto& [gen, exp] : rel.word) word.push_back(json::array({gen, exp}));
      rels.push_back(json{{"family", rel.family}, {"word", word}});
    }
    out << json{{"genus", p.genus}, {"generators", gens}, {"relators", rels}}.dump(2) << '\n';
  } else {
    out << p.text();
  }
  return 0;
}

int run_abelianization(const cli_options& o, std::ostream& out) {
  require_format(o.format, {"text", "json"});
  abelianization_result a = abelianization(handlebody_presentation(o.genus));
  if (o.format == "json") {
    json torsion = json::array();
    for (const auto& d : a.torsion) torsion.push_back(d.get_si());
    out << json{{"free_rank", a.free_rank}, {"torsion", torsion}, {"pretty", a.pretty()}}.dump(2)
        << '\n';
  } else {
    out << a.pretty() << '\n';
  }
  return 0;
}

const char* status_name(relation_status s) {
  switch (s) {
    case relation_status::holds_in_disk_group: return "holds in disk group";
    case relation_status::holds_modulo_invariants: return "holds modulo invariants";
    case relation_status::fails: return "FAILS";
    case relation_status::skipped_resource: return "oracle skipped (resource)";
  }
  return "?";
}

int run_relations(const cli_options& o, std::size_t cap, std::ostream& out) {
  require_format(o.format, {"text", "json"});
  relation_report rep = verify_relations(o.genus, cap);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& c : rep.checks)
      arr.push_back(json{{"family", c.family},
                         {"instance", c.instance},
                         {"permutations_match", c.permutations_match},
                         {"exponent_sums_consistent", c.exponent_sums_consistent},
                         {"oracle_ran", c.oracle_ran},
                         {"oracle_equal", c.oracle_equal},
                         {"oracle_equal_mirror", c.oracle_equal_mirror},
                         {"status", status_name(c.status)}});
    out << json{{"genus", rep.genus},
                {"partial", rep.partial},
                {"all_acceptable", rep.all_acceptable()},
                {"checks", arr}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& c : rep.checks)
      out << '(' << c.family << ") " << c.instance << "  ->  " << status_name(c.status)
          << (c.oracle_ran && !c.oracle_equal && c.oracle_equal_mirror ? " [mirror convention]"
                                                                       : "")
          << '\n';
    out << (rep.all_acceptable() ? "all acceptable\n" : "FAILURES PRESENT\n");
    if (rep.partial) out << "note: some oracle runs were skipped by the resource cap\n";
  }
  return rep.all_acceptable() ? 0 : 1;
}

braid_word parse_cli_word(const std::string& word, int strands) {
  return parse_word(word, strands);
}

int run_braid(const std::string& action, const cli_options& o, const std::string& word1,
              const std::string& word2, const std::string& kind, std::ostream& out) {
  require_format(o.format, {"text", "json"});
  if (action == "equal") {
    braid_word a = parse_cli_word(word1, o.strands);
    braid_word b = parse_cli_word(word2, o.strands);
    bool eq = braids_equal(a, b);
    if (o.format == "json")
      out << json{{"equal", eq}}.dump() << '\n';
    else
      out << (eq ? "true" : "false") << '\n';
    return 0;
  }
  if (action == "family") {
    static const std::map<std::string, braid_family> kinds{
        {"w6", braid_family::w6},     {"x4n8", braid_family::x4n8},
        {"y4n8", braid_family::y4n8}, {"w4n8", braid_family::w4n8},
        {"x4n6", braid_family::x4n6}, {"y4n6", braid_family::y4n6},
        {"w4n6", braid_family::w4n6}};
    auto it = kinds.find(kind);
    if (it == kinds.end()) throw std::invalid_argument("unknown family kind '" + kind + "'");
    braid_word w = family_word(it->second, o.n);
    if (o.format == "json")
      out << json{{"strands", w.strands()}, {"word", render_word(w)}}.dump() << '\n';
    else
      out << w.strands() << " strands: " << render_word(w) << '\n';
    return 0;
  }
  braid_word a = parse_cli_word(word1, o.strands);
  if (action == "perm") {
    permutation p = braid_permutation(a);
    if (o.format == "json") {
      json imgs = json::array();
      for (int i = 1; i <= p.size(); ++i) imgs.push_back(p.image(i));
      out << json{{"images", imgs}, {"cycles", p.cycle_string()}}.dump() << '\n';
    } else {
      out << p.cycle_string() << '\n';
    }
  } else if (action == "expsum") {
    int e = exponent_sum(a);
    if (o.format == "json")
      out << json{{"exponent_sum", e}}.dump() << '\n';
    else
      out << e << '\n';
  } else if (action == "pairing") {
    bool ok = pairing_preserved(a);
    if (o.format == "json")
      out << json{{"pairing_preserved", ok}}.dump() << '\n';
    else
      out << (ok ? "true" : "false") << '\n';
  } else if (action == "closure") {
    int c = closure_components(a);
    if (o.format == "json")
      out << json{{"closure_components", c}}.dump() << '\n';
    else
      out << c << '\n';
  } else {
    throw std::invalid_argument("unknown braid action '" + action + "'");
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"dilatations, train-track matrices and presentations for the wicket braid families"};
  app.name("hilden");
  cli_options o;

  auto add_format = [&o](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* dil = app.add_subcommand("dilatation", "certified dilatation for a strand count");
  dil->add_option("--strands", o.strands, "even strand count >= 6")->required();
  dil->add_option("--tol", o.tol, "bracket width");
  add_format(dil);

  auto* tab = app.add_subcommand("table", "dilatation table for n = 0..max-n plus header rows");
  tab->add_option("--max-n", o.max_n, "last family row")->required();
  add_format(tab);

  auto* conv = app.add_subcommand("convergence", "normalized entropy against 4 log kappa");
  conv->add_option("--max-n", o.max_n, "last n")->required();
  add_format(conv);

  bool want_w6 = false, closed_form = false;
  auto* mat = app.add_subcommand("matrix", "train-track incidence matrix");
  mat->add_option("--n", o.n, "family parameter");
  mat->add_flag("--w6", want_w6, "the six-strand matrix");
  add_format(mat);

  auto* cp = app.add_subcommand("charpoly", "characteristic polynomial of an incidence matrix");
  cp->add_option("--n", o.n, "family parameter");
  cp->add_flag("--w6", want_w6, "the six-strand matrix");
  cp->add_flag("--closed-form", closed_form, "emit the closed-form family polynomial instead");
  add_format(cp);

  auto* val = app.add_subcommand("validate", "certify matrices against the polynomial family");
  val->add_option("--max-n", o.max_n, "last n")->required();
  add_format(val);

  auto* pr = app.add_subcommand("prongs", "singularity data of the unstable foliation");
  pr->add_option("--n", o.n, "family parameter")->required();
  add_format(pr);

  auto* braid = app.add_subcommand("braid", "braid word computations");
  braid->require_subcommand(1);
  std::string word1, word2, kind;
  auto add_word_cmd = [&](const char* name, const char* desc, int nwords) {
    auto* c = braid->add_subcommand(name, desc);
    c->add_option("--strands", o.strands, "strand count")->required();
    c->add_option("word", word1, "braid word tokens")->required();
    if (nwords > 1) c->add_option("word2", word2, "second braid word")->required();
    add_format(c);
    return c;
  };
  add_word_cmd("perm", "underlying permutation in cycle form", 1);
  add_word_cmd("expsum", "exponent sum", 1);
  add_word_cmd("pairing", "endpoint pairing preservation", 1);
  add_word_cmd("closure", "components of the braided link", 1);
  add_word_cmd("equal", "exact equality in the disk braid group", 2);
  auto* fam = braid->add_subcommand("family", "named braid family word");
  fam->add_option("--kind", kind, "w6 x4n8 y4n8 w4n8 x4n6 y4n6 w4n6")->required();
  fam->add_option("--n", o.n, "family parameter");
  add_format(fam);

  auto* pres = app.add_subcommand("presentation", "finite presentation of the genus-g group");
  pres->add_option("--genus", o.genus, "genus >= 2")->required();
  add_format(pres);

  auto* ab = app.add_subcommand("abelianization", "abelianization via Smith normal form");
  ab->add_option("--genus", o.genus, "genus >= 2")->required();
  add_format(ab);

  std::size_t oracle_cap = kDefaultArtinLetterCap;
  auto* rel = app.add_subcommand("relations", "verify the presentation relations at braid level");
  rel->add_option("--genus", o.genus, "genus >= 2")->required();
  rel->add_option("--oracle-cap", oracle_cap, "letter cap for the equality oracle");
  add_format(rel);

  app.require_subcommand(1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (dil->parsed()) return run_dilatation(o, out);
    if (tab->parsed()) return run_table(o, out);
    if (conv->parsed()) return run_convergence(o, out);
    if (mat->parsed()) return run_matrix(o, want_w6, out);
    if (cp->parsed()) return run_charpoly(o, want_w6, closed_form, out);
    if (val->parsed()) return run_validate(o, out);
    if (pr->parsed()) return run_prongs(o, out);
    if (pres->parsed()) return run_presentation(o, out);
    if (ab->parsed()) return run_abelianization(o, out);
    if (rel->parsed()) return run_relations(o, oracle_cap, out);
    if (braid->parsed()) {
      for (auto* sub : braid->get_subcommands())
        if (sub->parsed()) return run_braid(sub->get_name(), o, word1, word2, kind, out);
    }
    err << "no subcommand\n";
    return 2;
  } catch (const resource_error& e) {
    err << "resource cap: " << e.what() << '\n';
    return 3;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hilden
