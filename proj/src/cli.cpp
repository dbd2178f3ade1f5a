// SPDX-License-Identifier: Apache-2.0
#include "layered/cli.hpp"

#include "layered/parser.hpp"
#include "layered/printer.hpp"

#include <sstream>

namespace layered {

LayerSemiring semiring_from_name(const std::string &name) {
  if (name == "trivial")
    return LayerSemiring::trivial();
  if (name == "nat")
    return LayerSemiring::naturals();
  if (name == "posrat")
    return LayerSemiring::positive_rationals();
  throw std::domain_error("unknown layering semiring: " + name);
}

namespace {

Assignment parse_assignment(const std::string &text,
                            const LayerSemiring &sr) {
  Assignment sigma;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t comma = text.find(',', i);
    std::string item = text.substr(i, comma == std::string::npos
                                          ? std::string::npos
                                          : comma - i);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::domain_error("assignment entries look like var=literal");
    std::string var = item.substr(0, eq);
    while (!var.empty() && var.back() == ' ')
      var.pop_back();
    std::size_t start = 0;
    while (start < var.size() && var[start] == ' ')
      ++start;
    var = var.substr(start);
    sigma[var] = parse_element(item.substr(eq + 1), sr);
    if (comma == std::string::npos)
      break;
    i = comma + 1;
  }
  return sigma;
}

std::string strip(const std::string &s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos)
    return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Term poly_to_term(const PolyNF &p) {
  if (p.is_zero())
    return t_zero();
  Term sum;
  for (const auto &m : p.monomials) {
    Term t = mono_to_term(m);
    sum = sum ? t_add(sum, t) : t;
  }
  return sum;
}

// essential form applied per side of every atom (projection-of-sum subterms
// are left to the splitting step)
Term essential_term(const Term &t, LayerKind kind, const Caps &caps) {
  try {
    return poly_to_term(essential_form(to_poly(t, kind), caps));
  } catch (const std::invalid_argument &) {
    return t;
  }
}

Formula essential_atoms(const Formula &f, LayerKind kind, const Caps &caps) {
  switch (f->kind) {
  case FormulaKind::Cmp:
    return f_cmp(f->rel, essential_term(f->t1, kind, caps),
                 essential_term(f->t2, kind, caps));
  case FormulaKind::Not:
    return f_not(essential_atoms(f->f1, kind, caps));
  case FormulaKind::And:
    return f_and(essential_atoms(f->f1, kind, caps),
                 essential_atoms(f->f2, kind, caps));
  case FormulaKind::Or:
    return f_or(essential_atoms(f->f1, kind, caps),
                essential_atoms(f->f2, kind, caps));
  case FormulaKind::Implies:
    return f_implies(essential_atoms(f->f1, kind, caps),
                     essential_atoms(f->f2, kind, caps));
  default:
    return f;
  }
}

} // namespace

CliResult run(const CliConfig &config, const std::string &input_text) {
  CliResult res;
  try {
    LayerSemiring sr = semiring_from_name(config.layering);
    CanonicalModel model{sr};
    Caps caps{config.monomial_cap, config.dnf_cap};
    ExecPolicy exec{!config.serial};
    std::ostringstream out;

    if (config.command == "qe") {
      Formula f = parse_formula(strip(input_text), sr);
      QEReport report = qe(f, model, caps, exec);
      out << pretty(report.result) << "\n";
      if (config.trace)
        for (const auto &line : report.trace)
          out << "# " << line << "\n";
      res.exit_code = 0;
    } else if (config.command == "decide") {
      Formula f = parse_formula(strip(input_text), sr);
      bool verdict = decide_sentence(f, model, caps, exec);
      out << (verdict ? "true" : "false") << "\n";
      res.exit_code = verdict ? 0 : 1;
    } else if (config.command == "eval") {
      Term t = parse_term(strip(input_text), sr);
      Assignment sigma = parse_assignment(config.assign, sr);
      out << elem_to_string(eval_term(t, sigma, model)) << "\n";
      res.exit_code = 0;
    } else if (config.command == "simplify") {
      Formula f = parse_formula(strip(input_text), sr);
      if (!quantifier_free(f))
        throw parse_error(1, 1, "a quantifier-free formula for simplify");
      Formula ess = essential_atoms(f, sr.kind(), caps);
      Formula split = split_all_atoms(ess, sr, caps);
      Formula out_f = split_to_surface(dnf(split, caps), sr.kind());
      out << pretty(fold_constants(out_f, model)) << "\n";
      res.exit_code = 0;
    } else if (config.command == "poly-eq") {
      std::string text = input_text;
      std::size_t sep = text.find("==");
      if (sep == std::string::npos)
        throw parse_error(1, 1, "two terms separated by '=='");
      Term p = parse_term(strip(text.substr(0, sep)), sr);
      Term q = parse_term(strip(text.substr(sep + 2)), sr);
      PolyEqResult r =
          poly_equal(p, q, model, caps, config.seed, config.samples, exec);
      if (r.equal) {
        out << "true\n";
        res.exit_code = 0;
      } else {
        out << "false\n";
        if (r.counterexample)
          out << "counterexample: " << assignment_to_string(*r.counterexample)
              << "\n";
        res.exit_code = 1;
      }
    } else if (config.command == "axioms") {
      AxiomSuite suite =
          axiom_suite(theory_kind_from_string(config.suite), sr);
      CheckReport report =
          check_axioms(suite, config.samples, config.seed, exec);
      out << (config.json ? report_json(report) : report_text(report));
      res.exit_code = report.all_pass() ? 0 : 1;
    } else {
      throw std::domain_error("unknown command: " + config.command);
    }
    res.out = out.str();
    return res;
  } catch (const parse_error &e) {
    res.err = std::string(e.what()) + "\n";
    res.exit_code = 2;
  } catch (const unsupported_error &e) {
    res.err = std::string(e.what()) + "\n";
    res.exit_code = 3;
  } catch (const cap_error &e) {
    res.err = std::string(e.what()) + "\n";
    res.exit_code = 4;
  } catch (const eval_error &e) {
    res.err = std::string(e.what()) + "\n";
    res.exit_code = 2;
  } catch (const std::domain_error &e) {
    res.err = std::string(e.what()) + "\n";
    res.exit_code = 2;
  } catch (const std::invalid_argument &e) {
    res.err = std::string(e.what()) + "\n";
    res.exit_code = 2;
  }
  return res;
}

} // namespace layered
