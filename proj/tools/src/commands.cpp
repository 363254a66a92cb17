#include "bitwist_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bitwist/abelian.hpp"
#include "bitwist/baumslag.hpp"
#include "bitwist/chartab.hpp"
#include "bitwist/polycyclic.hpp"
#include "bitwist/smith.hpp"
#include "bitwist_cli/parse.hpp"

namespace bitwist::cli {

  namespace {

    using Json = nlohmann::ordered_json;

    std::string schema(std::string const& name) {
      return "bitwist." + name + "/1";
    }

    Json json_int(Integer const& x) {
      if (x >= std::numeric_limits<long long>::min()
          && x <= std::numeric_limits<long long>::max()) {
        return static_cast<long long>(x);
      }
      return x.str();
    }

    Json json_vector(IntVector const& v) {
      Json a = Json::array();
      for (auto const& x : v) {
        a.push_back(json_int(x));
      }
      return a;
    }

    Json json_matrix(IntMatrix const& m) {
      Json a = Json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        a.push_back(json_vector(m.row(i)));
      }
      return a;
    }

    Json json_poly(PolyElement const& p) {
      return Json{{"v", json_vector(p.v)}, {"t", p.t}};
    }

    void emit(std::ostream& out, Json const& j) {
      out << j.dump(2) << "\n";
    }

    //! Integers print bare, reals with four decimals, complex values as a+bi.
    std::string format_value(std::complex<double> z) {
      auto fmt = [](double x) {
        double const r = std::round(x);
        if (std::abs(x - r) < 1e-6) {
          return std::to_string(static_cast<long long>(r));
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", x);
        return std::string(buf);
      };
      double const re = std::abs(z.real()) < 1e-9 ? 0.0 : z.real();
      double const im = std::abs(z.imag()) < 1e-9 ? 0.0 : z.imag();
      if (im == 0.0) {
        return fmt(re);
      }
      std::string s = re == 0.0 ? "" : fmt(re);
      std::string i = fmt(std::abs(im));
      if (i == "1") {
        i.clear();
      }
      if (im < 0) {
        s += "-" + i + "i";
      } else {
        s += (s.empty() ? "" : "+") + i + "i";
      }
      return s;
    }

    struct Common {
      bool json = false;
    };

    ////////////////////////////////////////////////////////////////////
    // classes / reidemeister
    ////////////////////////////////////////////////////////////////////

    struct PairOptions : Common {
      std::string group;
      std::string phi = "id";
      std::string psi = "id";
    };

    int cmd_classes(PairOptions const& o, std::ostream& out) {
      GroupSpec const   spec = parse_group_spec(o.group);
      FiniteGroup const g    = build_finite(spec);
      GroupMap const    phi  = parse_finite_map(o.phi, g);
      GroupMap const    psi  = parse_finite_map(o.psi, g);
      auto const        p    = twisted_classes(g, phi, psi);
      if (o.json) {
        Json classes = Json::array();
        for (auto const& c : p.classes) {
          Json members = Json::array();
          for (Element x : c) {
            members.push_back(g.element_name(x));
          }
          classes.push_back(members);
        }
        emit(out, Json{{"schema", schema("classes")},
                       {"group", spec.to_string()},
                       {"order", g.order()},
                       {"reidemeister", p.size()},
                       {"classes", classes}});
        return exit_ok;
      }
      out << "R = " << p.size() << "\n";
      for (std::size_t i = 0; i < p.size(); ++i) {
        out << "[" << i << "] {";
        for (std::size_t k = 0; k < p.classes[i].size(); ++k) {
          out << (k == 0 ? "" : ", ") << g.element_name(p.classes[i][k]);
        }
        out << "}\n";
      }
      return exit_ok;
    }

    int cmd_reidemeister(PairOptions const& o, std::ostream& out) {
      GroupSpec const spec = parse_group_spec(o.group);
      CountOrInfinite r;
      std::string     method;
      switch (spec.kind) {
        case GroupKind::abelian: {
          FgAbelianGroup const g = build_abelian(spec);
          r      = reidemeister_abelian(parse_abelian_map(o.phi, g),
                                        parse_abelian_map(o.psi, g));
          method = "smith-index";
          break;
        }
        case GroupKind::finite_perm:
        case GroupKind::finite_table: {
          FiniteGroup const g = build_finite(spec);
          r.value  = reidemeister_number(g, parse_finite_map(o.phi, g),
                                         parse_finite_map(o.psi, g));
          method = "orbits";
          break;
        }
        case GroupKind::bs: {
          auto const c = infinitude_certificate(spec.n, parse_bs_map(o.phi, spec.n),
                                                parse_bs_map(o.psi, spec.n));
          if (!c.valid()) {
            throw InputError(
                "R is only determined here when the certificate applies "
                "(equal degrees); see 'bs certify'");
          }
          r      = CountOrInfinite::infinity();
          method = "certificate";
          break;
        }
        case GroupKind::poly:
          throw InputError(
              "R is not computed exactly for poly groups; use quotient-bound "
              "for lower bounds");
      }
      if (o.json) {
        emit(out, Json{{"schema", schema("reidemeister")},
                       {"group", spec.to_string()},
                       {"method", method},
                       {"infinite", r.infinite},
                       {"value", r.infinite ? Json(nullptr) : json_int(r.value)}});
      } else {
        out << r.to_string() << "\n";
      }
      return exit_ok;
    }

    ////////////////////////////////////////////////////////////////////
    // verify-bf
    ////////////////////////////////////////////////////////////////////

    struct VerifyOptions : Common {
      std::string              group;
      std::string              phi;
      std::string              psi;
      bool                     finite         = false;
      bool                     counterexample = false;
      std::uint64_t            seed           = default_character_seed;
    };

    int verify_abelian(VerifyOptions const& o, GroupSpec const& spec,
                       std::ostream& out) {
      FgAbelianGroup const g   = build_abelian(spec);
      AbelianHom const     phi = parse_abelian_map(o.phi.empty() ? "id" : o.phi, g);
      AbelianHom const     psi = parse_abelian_map(o.psi.empty() ? "id" : o.psi, g);
      BfReport const       r   = verify_bitwisted_bf(phi, psi);
      if (o.json) {
        emit(out, Json{{"schema", schema("verify-bf")},
                       {"mode", "abelian"},
                       {"group", r.group},
                       {"pairs",
                        Json::array({Json{{"phi", phi.matrix().to_string()},
                                          {"psi", psi.matrix().to_string()},
                                          {"reidemeister", json_int(r.orbit_count)},
                                          {"snf_index", json_int(r.index)},
                                          {"coincidences", json_int(r.coincidences)},
                                          {"pass", r.pass}}})},
                       {"pass", r.pass}});
      } else {
        out << "group: " << r.group << "\n"
            << "orbit count:        " << r.orbit_count << "\n"
            << "smith index:        " << r.index << "\n"
            << "dual coincidences:  " << r.coincidences << "\n"
            << (r.pass ? "PASS" : "FAIL") << " (" << r.detail << ")\n";
      }
      return r.pass ? exit_ok : exit_fail_report;
    }

    int verify_finite(VerifyOptions const& o, GroupSpec const& spec,
                      std::ostream& out) {
      FiniteGroup const    g     = build_finite(spec);
      CharacterTable const table = character_table(g, o.seed);
      Json                 report{{"schema", schema("verify-bf")},
                                  {"mode", o.counterexample ? "counterexample" : "finite"},
                                  {"group", spec.to_string()},
                                  {"order", g.order()},
                                  {"classes", table.size()}};

      if (o.counterexample) {
        auto const r = counterexample_report(g, table);
        report["abelian"]      = r.abelian;
        report["reidemeister"] = r.reidemeister;
        report["coincidences"] = r.coincidences;
        report["dual_size"]    = r.dual_size;
        report["inequality"]   = r.inequality;
        report["pass"]         = r.pass;
        if (o.json) {
          emit(out, report);
        } else {
          out << "trivial endomorphism pair on a group of order " << r.order
              << (r.abelian ? " (abelian)" : " (nonabelian)") << "\n"
              << "R = " << r.reidemeister << ", #Coin = " << r.coincidences
              << ", #dual = " << r.dual_size << "\n"
              << (r.inequality ? "INEQUALITY" : "EQUALITY") << "\n"
              << (r.pass ? "PASS" : "FAIL") << "\n";
        }
        return r.pass ? exit_ok : exit_fail_report;
      }

      std::vector<GroupMap> phis, psis;
      std::vector<std::string> phi_names, psi_names;
      if (o.phi.empty() && o.psi.empty()) {
        auto const autos = automorphisms(g);
        phis = psis = autos;
        for (std::size_t i = 0; i < autos.size(); ++i) {
          phi_names.push_back("aut" + std::to_string(i));
        }
        psi_names = phi_names;
      } else {
        phis.push_back(parse_finite_map(o.phi.empty() ? "id" : o.phi, g));
        psis.push_back(parse_finite_map(o.psi.empty() ? "id" : o.psi, g));
        phi_names.push_back(o.phi.empty() ? "id" : o.phi);
        psi_names.push_back(o.psi.empty() ? "id" : o.psi);
      }
      Json        pairs  = Json::array();
      std::size_t passed = 0, total = 0;
      std::ostringstream failures;
      for (std::size_t i = 0; i < phis.size(); ++i) {
        for (std::size_t j = 0; j < psis.size(); ++j) {
          auto const r = verify_compact_bf(g, table, phis[i], psis[j]);
          ++total;
          passed += r.pass;
          pairs.push_back(Json{{"phi", phi_names[i]},
                               {"psi", psi_names[j]},
                               {"reidemeister", r.reidemeister},
                               {"coincidences", r.coincidences},
                               {"pass", r.pass}});
          if (!r.pass || phis.size() == 1) {
            failures << "(" << phi_names[i] << ", " << psi_names[j]
                     << "): R = " << r.reidemeister
                     << ", #Coin = " << r.coincidences
                     << (r.pass ? "" : "  FAIL") << "\n";
          }
        }
      }
      bool const pass = passed == total;
      report["pairs"] = pairs;
      report["pass"]  = pass;
      if (o.json) {
        emit(out, report);
      } else {
        out << "group of order " << g.order() << " with " << table.size()
            << " classes\n"
            << failures.str() << passed << "/" << total << " pairs agree\n"
            << (pass ? "PASS" : "FAIL") << "\n";
      }
      return pass ? exit_ok : exit_fail_report;
    }

    int cmd_verify_bf(VerifyOptions const& o, std::ostream& out) {
      GroupSpec const spec = parse_group_spec(o.group);
      if (o.finite || o.counterexample || spec.is_finite()) {
        return verify_finite(o, spec, out);
      }
      if (spec.kind != GroupKind::abelian) {
        throw InputError("verify-bf needs a finite or abelian group, got "
                         + to_string(spec.kind));
      }
      return verify_abelian(o, spec, out);
    }

    ////////////////////////////////////////////////////////////////////
    // chartab / snf
    ////////////////////////////////////////////////////////////////////

    struct ChartabOptions : Common {
      std::string   group;
      std::uint64_t seed = default_character_seed;
    };

    int cmd_chartab(ChartabOptions const& o, std::ostream& out) {
      GroupSpec const      spec = parse_group_spec(o.group);
      FiniteGroup const    g    = build_finite(spec);
      CharacterTable const t    = character_table(g, o.seed);
      if (o.json) {
        Json classes = Json::array();
        for (std::size_t j = 0; j < t.size(); ++j) {
          classes.push_back(Json{{"representative", g.element_name(t.classes.reps[j])},
                                 {"size", t.classes.sizes[j]}});
        }
        Json chars = Json::array();
        for (std::size_t i = 0; i < t.size(); ++i) {
          Json values = Json::array();
          for (auto const& z : t.values[i]) {
            double const re = std::abs(z.real()) < 1e-12 ? 0.0 : z.real();
            double const im = std::abs(z.imag()) < 1e-12 ? 0.0 : z.imag();
            values.push_back(Json::array({re, im}));
          }
          chars.push_back(Json{{"degree", t.degrees[i]}, {"values", values}});
        }
        emit(out, Json{{"schema", schema("chartab")},
                       {"group", spec.to_string()},
                       {"order", g.order()},
                       {"classes", classes},
                       {"characters", chars},
                       {"row_residual", t.row_residual},
                       {"column_residual", t.column_residual}});
        return exit_ok;
      }
      std::vector<std::vector<std::string>> cells;
      cells.push_back({"class"});
      cells.push_back({"size"});
      for (std::size_t j = 0; j < t.size(); ++j) {
        cells[0].push_back(g.element_name(t.classes.reps[j]));
        cells[1].push_back(std::to_string(t.classes.sizes[j]));
      }
      for (std::size_t i = 0; i < t.size(); ++i) {
        std::vector<std::string> row{"chi" + std::to_string(i)};
        for (auto const& z : t.values[i]) {
          row.push_back(format_value(z));
        }
        cells.push_back(std::move(row));
      }
      std::vector<std::size_t> width(t.size() + 1, 0);
      for (auto const& row : cells) {
        for (std::size_t j = 0; j < row.size(); ++j) {
          width[j] = std::max(width[j], row[j].size());
        }
      }
      for (auto const& row : cells) {
        std::string line;
        for (std::size_t j = 0; j < row.size(); ++j) {
          std::string cell = row[j];
          if (j == 0) {
            cell += std::string(width[j] - cell.size(), ' ');
          } else {
            cell = std::string(width[j] - cell.size() + 2, ' ') + cell;
          }
          line += cell;
        }
        out << line << "\n";
      }
      return exit_ok;
    }

    struct SnfOptions : Common {
      std::string matrix;
    };

    int cmd_snf(SnfOptions const& o, std::ostream& out) {
      IntMatrix const a = parse_matrix(o.matrix);
      SmithForm const s = smith_normal_form(a);
      if (o.json) {
        emit(out, Json{{"schema", schema("snf")},
                       {"matrix", json_matrix(a)},
                       {"diagonal", json_vector(s.diagonal())},
                       {"rank", s.rank()},
                       {"U", json_matrix(s.U)},
                       {"D", json_matrix(s.D)},
                       {"V", json_matrix(s.V)}});
      } else {
        out << "diagonal: " << bitwist::to_string(s.diagonal()) << "\n"
            << "rank: " << s.rank() << "\n"
            << "U = " << s.U.to_string() << "\n"
            << "D = " << s.D.to_string() << "\n"
            << "V = " << s.V.to_string() << "\n";
      }
      return exit_ok;
    }

    ////////////////////////////////////////////////////////////////////
    // bs
    ////////////////////////////////////////////////////////////////////

    struct BsOptions : Common {
      long long     n = 2;
      std::string   word;
      std::string   image_a;
      std::string   image_b;
      std::string   phi = "id";
      std::string   psi = "id";
      std::uint64_t seed   = 0xb5;
      std::size_t   checks = default_certificate_checks;
    };

    Json json_bs(BSElement const& e) {
      return Json{{"x", e.x.to_string()}, {"t", e.t}};
    }

    BSElement eval_bs(std::string const& text, long long n) {
      return embed_word(to_bs_word(parse_word(text, {"a", "b"})), n);
    }

    void check_base(long long n) {
      if (n < 2) {
        throw InputError("B(1,n) needs n >= 2, got " + std::to_string(n));
      }
    }

    int cmd_bs_eval(BsOptions const& o, std::ostream& out) {
      check_base(o.n);
      WordExpr const  w = parse_word(o.word, {"a", "b"});
      BSElement const e = embed_word(to_bs_word(w), o.n);
      if (o.json) {
        emit(out, Json{{"schema", schema("bs-eval")},
                       {"n", o.n},
                       {"word", w.to_string()},
                       {"element", json_bs(e)}});
      } else {
        out << e.to_string() << "\n";
      }
      return exit_ok;
    }

    int cmd_bs_endo_check(BsOptions const& o, std::ostream& out) {
      check_base(o.n);
      BSElement const a = eval_bs(o.image_a, o.n);
      BSElement const b = eval_bs(o.image_b, o.n);
      Json            report{{"schema", schema("bs-endo-check")},
                             {"n", o.n},
                             {"image_a", json_bs(a)},
                             {"image_b", json_bs(b)}};
      std::string problem;
      BSEndo      e{o.n, a, b};
      try {
        e = validate_bs_endo(o.n, a, b);
      } catch (ImageOfBNotInKernel const& ex) {
        problem = ex.what();
      } catch (RelationViolated const& ex) {
        problem = ex.what();
      }
      bool const valid = problem.empty();
      report["valid"]  = valid;
      if (valid) {
        report["degree"] = induced_degree(e);
        report["degree_check"]
            = degree_constraint_check(e) == DegreeCheck::consistent ? "consistent"
                                                                     : "violated";
        report["injective_admissible"]
            = !e.image_b.x.is_zero()
              && degree_constraint_check(e) == DegreeCheck::consistent;
      } else {
        report["reason"] = problem;
      }
      if (o.json) {
        emit(out, report);
      } else {
        out << "phi(a) = " << a.to_string() << "\n"
            << "phi(b) = " << b.to_string() << "\n";
        if (valid) {
          out << "relation phi(a)^-1 phi(b) phi(a) = phi(b)^" << o.n << ": OK\n"
              << "degree k = " << report["degree"].get<long long>()
              << ", degree constraint " << report["degree_check"].get<std::string>()
              << "\nVALID\n";
        } else {
          out << "INVALID: " << problem << "\n";
        }
      }
      return valid ? exit_ok : exit_fail_report;
    }

    int cmd_bs_certify(BsOptions const& o, std::ostream& out) {
      check_base(o.n);
      BSEndo const phi = parse_bs_map(o.phi, o.n);
      BSEndo const psi = parse_bs_map(o.psi, o.n);
      auto const   c   = infinitude_certificate(o.n, phi, psi, o.seed, o.checks);
      if (o.json) {
        Json witnesses = Json::array();
        for (auto const& w : c.witnesses) {
          witnesses.push_back(json_bs(w));
        }
        emit(out, Json{{"schema", schema("certify")},
                       {"n", c.n},
                       {"degree_phi", c.degree_phi},
                       {"degree_psi", c.degree_psi},
                       {"invariant", c.invariant},
                       {"witness_radius", c.witness_radius},
                       {"witnesses", witnesses},
                       {"seed", c.seed},
                       {"checks_run", c.checks_run},
                       {"checks_passed", c.checks_passed},
                       {"valid", c.valid()}});
      } else {
        out << "degrees: phi " << c.degree_phi << ", psi " << c.degree_psi << "\n"
            << "invariant: " << c.invariant << "\n"
            << "witnesses: a^m for |m| <= " << c.witness_radius
            << ", pairwise in different classes\n"
            << "randomized checks (seed " << c.seed << "): " << c.checks_passed
            << "/" << c.checks_run << "\n"
            << (c.valid() ? "R = INFINITE (certified)" : "FAIL: no certificate")
            << "\n";
      }
      return c.valid() ? exit_ok : exit_fail_report;
    }

    ////////////////////////////////////////////////////////////////////
    // decide / quotient-bound
    ////////////////////////////////////////////////////////////////////

    struct DecideOptions : Common {
      std::string group;
      std::string phi = "id";
      std::string psi = "id";
      std::string u;
      std::string v;
      int         shells      = 5;
      long long   max_modulus = 16;
      bool        exhaustive  = false;
    };

    int cmd_decide(DecideOptions const& o, std::ostream& out) {
      GroupSpec const   spec = parse_group_spec(o.group);
      PolyGroup const   g    = build_poly(spec);
      PolyAuto const    phi  = parse_poly_map(o.phi, g);
      PolyAuto const    psi  = parse_poly_map(o.psi, g);
      PolyElement const U    = parse_poly_element(o.u, g);
      PolyElement const V    = parse_poly_element(o.v, g);
      if (o.shells < 0 || o.max_modulus > 64) {
        throw InputError("budget: shells must be >= 0 and moduli <= 64");
      }
      DecisionBudget const budget{o.shells, o.max_modulus, o.exhaustive};
      Decision const       d = decide_twisted_conjugacy(g, phi, psi, U, V, budget);
      bool const           verified = verify_decision(g, phi, psi, U, V, d);
      if (o.json) {
        Json steps = Json::array();
        for (auto const& s : d.transcript) {
          steps.push_back(Json{{"stream", s.stream},
                               {"value", s.value},
                               {"outcome", s.outcome},
                               {"detail", s.detail},
                               {"witness", s.witness ? json_poly(*s.witness)
                                                     : Json(nullptr)},
                               {"quotient_order", s.quotient_order}});
        }
        emit(out, Json{{"schema", schema("decide")},
                       {"group", spec.to_string()},
                       {"phi", phi.to_string()},
                       {"psi", psi.to_string()},
                       {"u", json_poly(U)},
                       {"v", json_poly(V)},
                       {"budget", Json{{"shells", o.shells},
                                       {"max_modulus", o.max_modulus},
                                       {"exhaustive", o.exhaustive}}},
                       {"verdict", to_string(d.verdict)},
                       {"witness", d.witness ? json_poly(*d.witness) : Json(nullptr)},
                       {"modulus", d.modulus ? Json(*d.modulus) : Json(nullptr)},
                       {"verified", verified},
                       {"transcript", steps}});
      } else {
        out << "verdict: " << to_string(d.verdict) << "\n";
        if (d.witness) {
          out << "witness gamma = " << d.witness->to_string() << "\n";
        }
        if (d.modulus) {
          out << "separated modulo " << *d.modulus << "\n";
        }
        for (auto const& s : d.transcript) {
          out << "  " << s.stream << " " << s.value << ": " << s.outcome;
          if (s.witness) {
            out << " " << s.witness->to_string();
          }
          if (!s.detail.empty()) {
            out << " (" << s.detail << ")";
          }
          out << "\n";
        }
        out << "certificate " << (verified ? "verified" : "NOT verified") << "\n";
      }
      return verified ? exit_ok : exit_fail_report;
    }

    struct BoundOptions : Common {
      std::string group;
      std::string phi = "id";
      std::string psi = "id";
      long long   from = 2;
      long long   to   = 16;
    };

    int cmd_quotient_bound(BoundOptions const& o, std::ostream& out) {
      GroupSpec const spec = parse_group_spec(o.group);
      PolyGroup const g    = build_poly(spec);
      PolyAuto const  phi  = parse_poly_map(o.phi, g);
      PolyAuto const  psi  = parse_poly_map(o.psi, g);
      if (o.from < 2 || o.to < o.from || o.to > 64) {
        throw InputError("moduli must satisfy 2 <= from <= to <= 64");
      }
      std::vector<long long> moduli;
      for (long long m = o.from; m <= o.to; ++m) {
        moduli.push_back(m);
      }
      QuotientBound const b = quotient_class_lower_bound(g, phi, psi, moduli);
      if (o.json) {
        Json rows = Json::array();
        for (auto const& r : b.table) {
          Json row{{"modulus", r.modulus}, {"respects", r.respects}};
          if (r.respects) {
            row["order"]   = r.order;
            row["classes"] = r.classes;
          } else {
            row["reason"] = r.reason;
          }
          rows.push_back(row);
        }
        emit(out, Json{{"schema", schema("quotient-bound")},
                       {"group", spec.to_string()},
                       {"phi", phi.to_string()},
                       {"psi", psi.to_string()},
                       {"bound", b.bound},
                       {"attained_at", b.attained_at ? Json(*b.attained_at)
                                                     : Json(nullptr)},
                       {"stable_tail", b.stable_tail},
                       {"table", rows}});
      } else {
        for (auto const& r : b.table) {
          out << "m = " << std::setw(2) << r.modulus << ": ";
          if (r.respects) {
            out << "order " << r.order << ", classes " << r.classes << "\n";
          } else {
            out << "skipped (" << r.reason << ")\n";
          }
        }
        out << "lower bound R >= " << b.bound;
        if (b.attained_at) {
          out << " (first at m = " << *b.attained_at << ", unchanged over "
              << b.stable_tail << " later respecting moduli)";
        }
        out << "\n";
      }
      return exit_ok;
    }

  }  // namespace

  int run_command(std::vector<std::string> const& args, std::ostream& out,
                  std::ostream& err) {
    CLI::App app{"bitwist: bitwisted conjugacy and Reidemeister numbers",
                 "bitwist"};
    app.require_subcommand(1);
    int code = exit_ok;

    auto json_flag = [](CLI::App* sub, Common& c) {
      sub->add_flag("--json", c.json, "Machine-readable JSON output");
    };

    PairOptions classes_opts;
    auto* classes = app.add_subcommand("classes", "List (phi, psi)-twisted classes");
    classes->add_option("--group", classes_opts.group, "Group spec")->required();
    classes->add_option("--phi", classes_opts.phi, "Endomorphism phi");
    classes->add_option("--psi", classes_opts.psi, "Endomorphism psi");
    json_flag(classes, classes_opts);
    classes->callback([&] { code = cmd_classes(classes_opts, out); });

    PairOptions reid_opts;
    auto* reid = app.add_subcommand("reidemeister", "Number of twisted classes");
    reid->add_option("--group", reid_opts.group, "Group spec")->required();
    reid->add_option("--phi", reid_opts.phi, "Endomorphism phi");
    reid->add_option("--psi", reid_opts.psi, "Endomorphism psi");
    json_flag(reid, reid_opts);
    reid->callback([&] { code = cmd_reidemeister(reid_opts, out); });

    VerifyOptions bf_opts;
    auto* bf = app.add_subcommand(
        "verify-bf", "Compare R(phi, psi) with the dual coincidence count");
    bf->add_option("--group", bf_opts.group, "Group spec")->required();
    bf->add_option("--phi", bf_opts.phi, "Endomorphism phi (all automorphism pairs if omitted in finite mode)");
    bf->add_option("--psi", bf_opts.psi, "Endomorphism psi");
    bf->add_flag("--finite", bf_opts.finite, "Use character tables");
    bf->add_flag("--counterexample", bf_opts.counterexample,
                 "Report the trivial endomorphism pair");
    bf->add_option("--seed", bf_opts.seed, "Character-table seed");
    json_flag(bf, bf_opts);
    bf->callback([&] { code = cmd_verify_bf(bf_opts, out); });

    ChartabOptions ct_opts;
    auto* ct = app.add_subcommand("chartab", "Character table of a finite group");
    ct->add_option("--group", ct_opts.group, "Group spec")->required();
    ct->add_option("--seed", ct_opts.seed, "Random combination seed");
    json_flag(ct, ct_opts);
    ct->callback([&] { code = cmd_chartab(ct_opts, out); });

    SnfOptions snf_opts;
    auto* snf = app.add_subcommand("snf", "Smith normal form U A V = D");
    snf->add_option("--matrix", snf_opts.matrix, "Matrix [[..],[..]]")->required();
    json_flag(snf, snf_opts);
    snf->callback([&] { code = cmd_snf(snf_opts, out); });

    BsOptions bs_opts;
    auto* bs = app.add_subcommand("bs", "Baumslag-Solitar group B(1,n)");
    bs->require_subcommand(1);
    auto* eval = bs->add_subcommand("eval", "Evaluate a word in Z[1/n] x| Z");
    eval->add_option("-n", bs_opts.n, "Base n >= 2");
    eval->add_option("word", bs_opts.word, "Word over a, b")->required();
    json_flag(eval, bs_opts);
    eval->callback([&] { code = cmd_bs_eval(bs_opts, out); });
    auto* endo = bs->add_subcommand("endo-check", "Validate generator images");
    endo->add_option("-n", bs_opts.n, "Base n >= 2");
    endo->add_option("--a", bs_opts.image_a, "Word for the image of a")->required();
    endo->add_option("--b", bs_opts.image_b, "Word for the image of b")->required();
    json_flag(endo, bs_opts);
    endo->callback([&] { code = cmd_bs_endo_check(bs_opts, out); });
    auto* certify = bs->add_subcommand("certify", "Certify R(phi, psi) is infinite");
    certify->add_option("-n", bs_opts.n, "Base n >= 2");
    certify->add_option("--phi", bs_opts.phi, "'id' or 'a=<word>; b=<word>'");
    certify->add_option("--psi", bs_opts.psi, "'id' or 'a=<word>; b=<word>'");
    certify->add_option("--seed", bs_opts.seed, "Seed of the randomized checks");
    certify->add_option("--checks", bs_opts.checks, "Number of randomized checks");
    json_flag(certify, bs_opts);
    certify->callback([&] { code = cmd_bs_certify(bs_opts, out); });

    DecideOptions dec_opts;
    auto* dec = app.add_subcommand("decide", "Decide twisted conjugacy in Z^d x|_A Z");
    dec->add_option("--group", dec_opts.group, "Poly group spec")->required();
    dec->add_option("--phi", dec_opts.phi, "'id' or 'M=[[..]] eps=1 u=[..]'");
    dec->add_option("--psi", dec_opts.psi, "'id' or 'M=[[..]] eps=1 u=[..]'");
    dec->add_option("--u", dec_opts.u, "Element U")->required();
    dec->add_option("--v", dec_opts.v, "Element V")->required();
    dec->add_option("--shells", dec_opts.shells, "Number of search shells");
    dec->add_option("--max-modulus", dec_opts.max_modulus, "Largest modulus");
    dec->add_flag("--exhaustive", dec_opts.exhaustive,
                  "Run the whole budget and record every step");
    json_flag(dec, dec_opts);
    dec->callback([&] { code = cmd_decide(dec_opts, out); });

    BoundOptions qb_opts;
    auto* qb = app.add_subcommand("quotient-bound",
                                  "Class counts of congruence quotients");
    qb->add_option("--group", qb_opts.group, "Poly group spec")->required();
    qb->add_option("--phi", qb_opts.phi, "'id' or 'M=[[..]] eps=1 u=[..]'");
    qb->add_option("--psi", qb_opts.psi, "'id' or 'M=[[..]] eps=1 u=[..]'");
    qb->add_option("--from", qb_opts.from, "Smallest modulus");
    qb->add_option("--to", qb_opts.to, "Largest modulus");
    json_flag(qb, qb_opts);
    qb->callback([&] { code = cmd_quotient_bound(qb_opts, out); });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::Error const& e) {
      if (e.get_exit_code() == 0) {
        app.exit(e, out, err);
        return exit_ok;
      }
      err << "error: " << e.what() << "\n";
      return exit_input_error;
    } catch (std::exception const& e) {
      // InputError, ParseError and every library Error land here
      err << "error: " << e.what() << "\n";
      return exit_input_error;
    }
    return code;
  }

}  // namespace bitwist::cli
