#include "hilden/presentation.hpp"

#include <sstream>
#include <stdexcept>

#include "hilden/artin.hpp"

namespace hilden {

std::string pres_generator::name() const { return std::string(1, kind) + std::to_string(index); }

int presentation::generator_id(char kind, int index) const {
  for (std::size_t k = 0; k < generators.size(); ++k)
    if (generators[k].kind == kind && generators[k].index == index) return static_cast<int>(k);
  return -1;
}

std::string presentation::text() const {
  std::ostringstream os;
  os << "generators:";
  for (const auto& g : generators) os << ' ' << g.name();
  os << '\n';
  int family = 0;
  for (const auto& rel : relators) {
    if (rel.family != family) {
      family = rel.family;
      os << "relation family (" << family << ")\n";
    }
    os << "  ";
    for (std::size_t k = 0; k < rel.word.size(); ++k) {
      const auto& [gen, exp] = rel.word[k];
      os << (k ? " " : "") << generators[gen].name();
      if (exp != 1) os << '^' << exp;
    }
    os << " = 1\n";
  }
  return os.str();
}

namespace {

using run_word = std::vector<std::pair<int, int>>;

run_word concat(run_word a, const run_word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

run_word inverse_of(const run_word& a) {
  run_word out;
  for (auto it = a.rbegin(); it != a.rend(); ++it) out.emplace_back(it->first, -it->second);
  return out;
}

}  // namespace

presentation handlebody_presentation(int genus) {
  if (genus < 2) throw std::invalid_argument("handlebody_presentation: genus must be >= 2");
  const int g = genus;
  presentation p;
  p.genus = g;
  for (int i = 1; i <= g; ++i) p.generators.push_back({'r', i});
  for (int i = 1; i <= g; ++i) p.generators.push_back({'s', i});
  for (int j = 1; j <= g + 1; ++j) p.generators.push_back({'t', j});
  auto R = [](int i) { return i - 1; };
  auto S = [g](int i) { return g + i - 1; };
  auto T = [g](int j) { return 2 * g + j - 1; };
  auto add = [&p](int family, const run_word& lhs, const run_word& rhs) {
    p.relators.push_back({family, concat(lhs, inverse_of(rhs))});
  };
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= g; ++j) {
      if (j - i > 1) {
        add(1, {{R(i), 1}, {R(j), 1}}, {{R(j), 1}, {R(i), 1}});
        add(2, {{S(i), 1}, {S(j), 1}}, {{S(j), 1}, {S(i), 1}});
      }
      if (i - j > 1 || j - i > 1) add(3, {{R(i), 1}, {S(j), 1}}, {{S(j), 1}, {R(i), 1}});
    }
  for (int i = 1; i <= g - 1; ++i) {
    add(1, {{R(i), 1}, {R(i + 1), 1}, {R(i), 1}}, {{R(i + 1), 1}, {R(i), 1}, {R(i + 1), 1}});
    add(2, {{S(i), 1}, {S(i + 1), 1}, {S(i), 1}}, {{S(i + 1), 1}, {S(i), 1}, {S(i + 1), 1}});
    add(4, {{R(i), 1}, {S(i + 1), 1}, {S(i), 1}}, {{S(i + 1), 1}, {S(i), 1}, {R(i + 1), 1}});
    add(4, {{R(i), 1}, {R(i + 1), 1}, {S(i), 1}}, {{S(i + 1), 1}, {R(i), 1}, {R(i + 1), 1}});
    add(4, {{S(i), 1}, {S(i + 1), 1}, {R(i), 1}}, {{R(i + 1), 1}, {S(i), 1}, {S(i + 1), 1}});
  }
  for (int i = 1; i <= g; ++i)
    add(5, {{R(i), 1}, {S(i), 1}, {T(i), 1}, {R(i), 1}}, {{T(i), 1}, {S(i), 1}});
  for (int i = 1; i <= g + 1; ++i)
    for (int j = i + 1; j <= g + 1; ++j)
      add(6, {{T(i), 1}, {T(j), 1}}, {{T(j), 1}, {T(i), 1}});
  for (int i = 1; i <= g; ++i) {
    for (int j = 1; j <= g + 1; ++j)
      if (j != i && j != i + 1) add(7, {{R(i), 1}, {T(j), 1}}, {{T(j), 1}, {R(i), 1}});
    add(7, {{T(i + 1), 1}, {R(i), 1}}, {{R(i), 1}, {T(i), 1}});
  }
  for (int i = 1; i <= g; ++i) {
    for (int j = 1; j <= g + 1; ++j)
      if (j != i && j != i + 1) add(8, {{S(i), 1}, {T(j), 1}}, {{T(j), 1}, {S(i), 1}});
    add(8, {{T(i), 1}, {S(i), 1}}, {{S(i), 1}, {T(i + 1), 1}});
    add(8, {{T(i + 1), 1}, {S(i), 1}}, {{S(i), 1}, {T(i), 1}});
  }
  {
    run_word block;
    for (int i = g; i >= 1; --i) block.emplace_back(S(i), 1);
    block.emplace_back(T(1), 2);
    run_word nine;
    for (int rep = 0; rep <= g; ++rep) nine = concat(nine, block);
    p.relators.push_back({9, nine});
  }
  {
    run_word theta{{T(1), 1}};
    for (int i = 1; i <= g; ++i) theta.emplace_back(S(i), 1);
    for (int i = g; i >= 1; --i) theta.emplace_back(R(i), -1);
    theta.emplace_back(T(1), 1);
    p.relators.push_back({10, concat(theta, theta)});
    for (std::size_t x = 0; x < p.generators.size(); ++x) {
      run_word comm = concat(theta, {{static_cast<int>(x), 1}});
      comm = concat(comm, inverse_of(theta));
      comm.emplace_back(static_cast<int>(x), -1);
      p.relators.push_back({10, comm});
    }
  }
  return p;
}

abelianization_result abelianization(const presentation& p) {
  std::vector<std::vector<bigint>> rows;
  rows.reserve(p.relators.size());
  for (const auto& rel : p.relators) {
    std::vector<bigint> row(p.generators.size());
    for (const auto& [gen, exp] : rel.word) row[gen] += exp;
    rows.push_back(std::move(row));
  }
  snf_result snf = smith_normal_form(std::move(rows), static_cast<int>(p.generators.size()));
  abelianization_result out;
  out.free_rank = snf.free_rank;
  for (auto& d : snf.factors)
    if (d != 1) out.torsion.push_back(d);
  return out;
}

std::string abelianization_result::pretty() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < free_rank; ++k) {
    os << (first ? "" : " + ") << "Z";
    first = false;
  }
  for (const auto& d : torsion) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

struct sided_instance {
  int family;
  std::string text;
  run_word lhs, rhs;
  bool spherical_only;  // (9) and (10): compared against a fixed target word
};

braid_word expand(const run_word& w, const presentation& p, int strands, bool mirror) {
  braid_word out(strands);
  for (const auto& [gen, exp] : w) {
    const pres_generator& pg = p.generators[gen];
    wicket_kind kind = pg.kind == 'r'   ? wicket_kind::r
                       : pg.kind == 's' ? wicket_kind::s
                                        : wicket_kind::t;
    braid_word factor = wicket_generator(kind, pg.index, strands);
    if (mirror) {
      std::vector<int> flipped = factor.letters();
      for (int& l : flipped) l = -l;
      factor = braid_word(strands, std::move(flipped));
    }
    if (exp < 0) factor = inverse(factor);
    for (int rep = 0; rep < (exp < 0 ? -exp : exp); ++rep) out = compose(out, factor);
  }
  return out;
}

std::string side_text(const run_word& w, const presentation& p) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    os << (k ? " " : "") << p.generators[w[k].first].name();
    if (w[k].second != 1) os << '^' << w[k].second;
  }
  if (w.empty()) os << "1";
  return os.str();
}

}  // namespace

bool relation_report::all_acceptable() const {
  for (const auto& c : checks)
    if (c.status == relation_status::fails) return false;
  return !checks.empty();
}

relation_report verify_relations(int genus, std::size_t oracle_letter_cap, int oracle_genus_cap) {
  presentation p = handlebody_presentation(genus);
  const int g = genus;
  const int strands = 2 * g + 2;
  relation_report report;
  report.genus = g;
  const bool oracle_allowed = g <= oracle_genus_cap;

  std::vector<sided_instance> instances;
  // families (1)-(8): split each relator w = lhs * rhs^-1 back into sides
  // by rebuilding them the same way handlebody_presentation does
  {
    // reconstruct sides directly; keep in sync with handlebody_presentation
    auto push = [&](int family, run_word lhs, run_word rhs) {
      sided_instance inst;
      inst.family = family;
      inst.text = side_text(lhs, p) + " = " + side_text(rhs, p);
      inst.lhs = std::move(lhs);
      inst.rhs = std::move(rhs);
      inst.spherical_only = false;
      instances.push_back(std::move(inst));
    };
    auto R = [](int i) { return i - 1; };
    auto S = [g](int i) { return g + i - 1; };
    auto T = [g](int j) { return 2 * g + j - 1; };
    for (int i = 1; i <= g; ++i)
      for (int j = 1; j <= g; ++j) {
        if (j - i > 1) {
          push(1, {{R(i), 1}, {R(j), 1}}, {{R(j), 1}, {R(i), 1}});
          push(2, {{S(i), 1}, {S(j), 1}}, {{S(j), 1}, {S(i), 1}});
        }
        if (i - j > 1 || j - i > 1) push(3, {{R(i), 1}, {S(j), 1}}, {{S(j), 1}, {R(i), 1}});
      }
    for (int i = 1; i <= g - 1; ++i) {
      push(1, {{R(i), 1}, {R(i + 1), 1}, {R(i), 1}}, {{R(i + 1), 1}, {R(i), 1}, {R(i + 1), 1}});
      push(2, {{S(i), 1}, {S(i + 1), 1}, {S(i), 1}}, {{S(i + 1), 1}, {S(i), 1}, {S(i + 1), 1}});
      push(4, {{R(i), 1}, {S(i + 1), 1}, {S(i), 1}}, {{S(i + 1), 1}, {S(i), 1}, {R(i + 1), 1}});
      push(4, {{R(i), 1}, {R(i + 1), 1}, {S(i), 1}}, {{S(i + 1), 1}, {R(i), 1}, {R(i + 1), 1}});
      push(4, {{S(i), 1}, {S(i + 1), 1}, {R(i), 1}}, {{R(i + 1), 1}, {S(i), 1}, {S(i + 1), 1}});
    }
    for (int i = 1; i <= g; ++i)
      push(5, {{R(i), 1}, {S(i), 1}, {T(i), 1}, {R(i), 1}}, {{T(i), 1}, {S(i), 1}});
    for (int i = 1; i <= g + 1; ++i)
      for (int j = i + 1; j <= g + 1; ++j)
        push(6, {{T(i), 1}, {T(j), 1}}, {{T(j), 1}, {T(i), 1}});
    for (int i = 1; i <= g; ++i) {
      for (int j = 1; j <= g + 1; ++j)
        if (j != i && j != i + 1) push(7, {{R(i), 1}, {T(j), 1}}, {{T(j), 1}, {R(i), 1}});
      push(7, {{T(i + 1), 1}, {R(i), 1}}, {{R(i), 1}, {T(i), 1}});
    }
    for (int i = 1; i <= g; ++i) {
      for (int j = 1; j <= g + 1; ++j)
        if (j != i && j != i + 1) push(8, {{S(i), 1}, {T(j), 1}}, {{T(j), 1}, {S(i), 1}});
      push(8, {{T(i), 1}, {S(i), 1}}, {{S(i), 1}, {T(i + 1), 1}});
      push(8, {{T(i + 1), 1}, {S(i), 1}}, {{S(i), 1}, {T(i), 1}});
    }
    // (9): left side against the full twist, which Gamma kills
    {
      run_word block;
      for (int i = g; i >= 1; --i) block.emplace_back(S(i), 1);
      block.emplace_back(T(1), 2);
      run_word nine;
      for (int rep = 0; rep <= g; ++rep) nine = concat(nine, block);
      sided_instance inst;
      inst.family = 9;
      inst.text = "(" + side_text(block, p) + ")^" + std::to_string(g + 1) + " = Delta^2";
      inst.lhs = std::move(nine);
      inst.spherical_only = true;
      instances.push_back(std::move(inst));
    }
    // (10): theta^2 and the commutators, against the empty word
    {
      run_word theta{{T(1), 1}};
      for (int i = 1; i <= g; ++i) theta.emplace_back(S(i), 1);
      for (int i = g; i >= 1; --i) theta.emplace_back(R(i), -1);
      theta.emplace_back(T(1), 1);
      sided_instance sq;
      sq.family = 10;
      sq.text = "theta^2 = 1";
      sq.lhs = concat(theta, theta);
      sq.spherical_only = true;
      instances.push_back(std::move(sq));
      for (std::size_t x = 0; x < p.generators.size(); ++x) {
        sided_instance comm;
        comm.family = 10;
        comm.text = "theta " + p.generators[x].name() + " = " + p.generators[x].name() + " theta";
        comm.lhs = concat(theta, {{static_cast<int>(x), 1}});
        comm.rhs = concat({{static_cast<int>(x), 1}}, theta);
        comm.spherical_only = true;
        instances.push_back(std::move(comm));
      }
    }
  }

  const braid_word full_twist = full_twist_power(strands, 1);
  for (const auto& inst : instances) {
    relation_check check;
    check.family = inst.family;
    check.instance = inst.text;
    braid_word lhs = expand(inst.lhs, p, strands, false);
    const bool vs_full_twist = inst.family == 9;
    braid_word rhs = vs_full_twist ? full_twist : expand(inst.rhs, p, strands, false);
    check.permutations_match = braid_permutation(lhs) == braid_permutation(rhs);
    if (inst.family == 9) {
      check.exponent_sums_consistent =
          std::abs(exponent_sum(lhs)) == std::abs(exponent_sum(rhs));
    } else if (inst.family == 10) {
      // consistency in the abelianization of SB_m, which is Z/(2m-2)
      int diff = exponent_sum(lhs) - exponent_sum(rhs);
      check.exponent_sums_consistent = diff % (2 * strands - 2) == 0;
    } else {
      check.exponent_sums_consistent = exponent_sum(lhs) == exponent_sum(rhs);
    }
    if (!check.permutations_match || !check.exponent_sums_consistent) {
      check.status = relation_status::fails;
      report.checks.push_back(std::move(check));
      continue;
    }
    if (!oracle_allowed || lhs.length() > oracle_letter_cap || rhs.length() > oracle_letter_cap) {
      check.status = relation_status::skipped_resource;
      report.partial = true;
      report.checks.push_back(std::move(check));
      continue;
    }
    check.oracle_ran = true;
    if (inst.spherical_only) {
      braid_word lhs_m = expand(inst.lhs, p, strands, true);
      braid_word rhs_m = vs_full_twist ? full_twist : expand(inst.rhs, p, strands, true);
      check.oracle_equal = braids_equal(lhs, rhs, oracle_letter_cap);
      check.oracle_equal_mirror = braids_equal(lhs_m, rhs_m, oracle_letter_cap);
    } else {
      // mirroring every sigma sign is an automorphism of B_m, so two-sided
      // relations hold mirrored exactly when they hold as written
      check.oracle_equal = braids_equal(lhs, rhs, oracle_letter_cap);
      check.oracle_equal_mirror = check.oracle_equal;
    }
    check.status = (check.oracle_equal || check.oracle_equal_mirror)
                       ? relation_status::holds_in_disk_group
                       : relation_status::holds_modulo_invariants;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace hilden
