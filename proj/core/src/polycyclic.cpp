#include "bitwist/polycyclic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bitwist/errors.hpp"
#include "bitwist/smith.hpp"

namespace bitwist {

  namespace {
    constexpr long long power_cache = 16;

    void check_dimension(std::size_t d, PolyElement const& p) {
      if (p.v.size() != d) {
        throw DimensionMismatch("element " + p.to_string()
                                + " does not have dimension "
                                + std::to_string(d));
      }
    }

    IntMatrix square_power(IntMatrix base, unsigned long long k) {
      IntMatrix result = IntMatrix::identity(base.rows());
      while (k != 0) {
        if (k & 1u) {
          result = result * base;
        }
        k >>= 1;
        if (k != 0) {
          base = base * base;
        }
      }
      return result;
    }

    IntVector add(IntVector a, IntVector const& b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] += b[i];
      }
      return a;
    }

    IntVector negate(IntVector a) {
      for (auto& x : a) {
        x = -x;
      }
      return a;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // PolyGroup
  ////////////////////////////////////////////////////////////////////////

  PolyGroup::PolyGroup(IntMatrix action) : action_(std::move(action)) {
    if (!action_.is_square() || action_.rows() == 0) {
      throw NotUnimodular("action matrix must be square and nonempty");
    }
    if (abs(action_.determinant()) != 1) {
      throw NotUnimodular("action matrix " + action_.to_string()
                          + " has determinant "
                          + action_.determinant().str());
    }
    // U A V = I for unimodular A, so A^-1 = V U.
    SmithForm const s = smith_normal_form(action_);
    inverse_          = s.V * s.U;
    positive_.push_back(IntMatrix::identity(dimension()));
    negative_.push_back(IntMatrix::identity(dimension()));
    for (long long t = 1; t <= power_cache; ++t) {
      positive_.push_back(positive_.back() * action_);
      negative_.push_back(negative_.back() * inverse_);
    }
  }

  IntMatrix PolyGroup::power(long long t) const {
    if (t >= 0 && t <= power_cache) {
      return positive_[static_cast<std::size_t>(t)];
    }
    if (t < 0 && -t <= power_cache) {
      return negative_[static_cast<std::size_t>(-t)];
    }
    return t > 0 ? square_power(action_, static_cast<unsigned long long>(t))
                 : square_power(inverse_, static_cast<unsigned long long>(-t));
  }

  std::string PolyElement::to_string() const {
    std::string out = "((";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i == 0 ? "" : ",") + v[i].str();
    }
    return out + ")," + std::to_string(t) + ")";
  }

  PolyElement poly_multiply(PolyGroup const& g, PolyElement const& p,
                            PolyElement const& q) {
    check_dimension(g.dimension(), p);
    check_dimension(g.dimension(), q);
    return {add(p.v, g.power(p.t) * q.v), p.t + q.t};
  }

  PolyElement poly_inverse(PolyGroup const& g, PolyElement const& p) {
    check_dimension(g.dimension(), p);
    return {negate(g.power(-p.t) * p.v), -p.t};
  }

  PolyElement poly_power(PolyGroup const& g, PolyElement const& p,
                         long long k) {
    PolyElement base   = k < 0 ? poly_inverse(g, p) : p;
    auto        e      = static_cast<unsigned long long>(k < 0 ? -k : k);
    PolyElement result = PolyElement::identity(g.dimension());
    while (e != 0) {
      if (e & 1u) {
        result = poly_multiply(g, result, base);
      }
      e >>= 1;
      if (e != 0) {
        base = poly_multiply(g, base, base);
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Automorphisms
  ////////////////////////////////////////////////////////////////////////

  PolyElement PolyAuto::apply(PolyGroup const& g, PolyElement const& p) const {
    check_dimension(g.dimension(), p);
    PolyElement const fiber{M * p.v, 0};
    return poly_multiply(g, fiber, poly_power(g, PolyElement{u, eps}, p.t));
  }

  PolyAuto PolyAuto::identity(PolyGroup const& g) {
    return PolyAuto{IntMatrix::identity(g.dimension()), 1,
                    IntVector(g.dimension())};
  }

  std::string PolyAuto::to_string() const {
    return "M=" + M.to_string() + " eps=" + std::to_string(eps)
           + " u=" + bitwist::to_string(u);
  }

  PolyAuto validate_poly_auto(PolyGroup const& g, IntMatrix M, int eps,
                              IntVector u) {
    std::size_t const d = g.dimension();
    if (M.rows() != d || M.cols() != d || u.size() != d) {
      throw DimensionMismatch("automorphism data must have dimension "
                              + std::to_string(d));
    }
    if (eps != 1 && eps != -1) {
      throw NotCompatible("eps must be +1 or -1");
    }
    if (abs(M.determinant()) != 1) {
      throw NotUnimodular("M = " + M.to_string() + " is not unimodular");
    }
    if (!(M * g.action() == g.power(eps) * M)) {
      throw NotCompatible("M A != A^" + std::to_string(eps) + " M for M = "
                          + M.to_string());
    }
    return PolyAuto{std::move(M), eps, std::move(u)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruence quotients
  ////////////////////////////////////////////////////////////////////////

  long long order_mod(IntMatrix const& A, long long m) {
    if (m < 2) {
      throw Error("modulus must be at least 2");
    }
    std::size_t const d = A.rows();
    IntMatrix         reduced(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        reduced(i, j) = mod(A(i, j), m);
      }
    }
    IntMatrix const id  = IntMatrix::identity(d);
    IntMatrix       cur = reduced;
    for (long long k = 1; k <= 10'000'000; ++k) {
      if (cur == id) {
        return k;
      }
      cur = cur * reduced;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          cur(i, j) = mod(cur(i, j), m);
        }
      }
    }
    throw Error("order of A mod " + std::to_string(m) + " not found");
  }

  CongruenceQuotient::CongruenceQuotient(long long m, long long period,
                                         std::size_t d, FiniteGroup group,
                                         GroupMap phi, GroupMap psi)
      : modulus_(m),
        period_(period),
        dimension_(d),
        group_(std::move(group)),
        phi_(std::move(phi)),
        psi_(std::move(psi)) {}

  Element CongruenceQuotient::project(PolyElement const& p) const {
    check_dimension(dimension_, p);
    std::size_t index = 0;
    std::size_t scale = 1;
    for (std::size_t i = 0; i < dimension_; ++i) {
      index += static_cast<std::size_t>(mod(p.v[i], modulus_)) * scale;
      scale *= static_cast<std::size_t>(modulus_);
    }
    long long t = p.t % period_;
    if (t < 0) {
      t += period_;
    }
    return static_cast<Element>(index + static_cast<std::size_t>(t) * scale);
  }

  PolyElement CongruenceQuotient::lift(Element x) const {
    PolyElement p{IntVector(dimension_), 0};
    std::size_t rest = x;
    auto const  m    = static_cast<std::size_t>(modulus_);
    for (std::size_t i = 0; i < dimension_; ++i) {
      p.v[i] = rest % m;
      rest /= m;
    }
    p.t = static_cast<long long>(rest);
    return p;
  }

  CongruenceQuotient congruence_quotient(PolyGroup const& g, long long m,
                                         PolyAuto const& phi,
                                         PolyAuto const& psi) {
    std::size_t const d = g.dimension();
    long long const   L = order_mod(g.action(), m);

    std::size_t fiber = 1;
    for (std::size_t i = 0; i < d; ++i) {
      fiber *= static_cast<std::size_t>(m);
      if (fiber > default_closure_cap) {
        throw Error("congruence quotient too large");
      }
    }
    std::size_t const n = fiber * static_cast<std::size_t>(L);
    if (n > default_closure_cap) {
      throw Error("congruence quotient of order " + std::to_string(n)
                  + " exceeds the cap of "
                  + std::to_string(default_closure_cap));
    }

    // Kernel generators (m e_i, 0) and (0, L) must map into the kernel.
    std::vector<std::pair<std::string, PolyElement>> kernel;
    for (std::size_t i = 0; i < d; ++i) {
      PolyElement k{IntVector(d), 0};
      k.v[i] = m;
      kernel.emplace_back(k.to_string(), k);
    }
    kernel.emplace_back(PolyElement{IntVector(d), L}.to_string(),
                        PolyElement{IntVector(d), L});
    auto in_kernel = [&](PolyElement const& p) {
      if (p.t % L != 0) {
        return false;
      }
      return std::all_of(p.v.begin(), p.v.end(),
                         [m](Integer const& x) { return x % m == 0; });
    };
    for (auto const& [label, k] : kernel) {
      if (!in_kernel(phi.apply(g, k))) {
        throw DoesNotRespect("phi", label);
      }
      if (!in_kernel(psi.apply(g, k))) {
        throw DoesNotRespect("psi", label);
      }
    }

    // A^t mod m for t in [0, L).
    std::vector<std::vector<long long>> powmod;
    for (long long t = 0; t < L; ++t) {
      IntMatrix const         p = g.power(t);
      std::vector<long long>  flat(d * d);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          flat[i * d + j] = static_cast<long long>(mod(p(i, j), m));
        }
      }
      powmod.push_back(std::move(flat));
    }
    auto decode = [&](std::size_t x, std::vector<long long>& v) {
      for (std::size_t i = 0; i < d; ++i) {
        v[i] = static_cast<long long>(x % static_cast<std::size_t>(m));
        x /= static_cast<std::size_t>(m);
      }
      return static_cast<long long>(x);
    };
    std::vector<Element>   table(n * n);
    std::vector<long long> v(d), w(d);
    for (std::size_t x = 0; x < n; ++x) {
      long long const t = decode(x, v);
      auto const&     a = powmod[static_cast<std::size_t>(t)];
      for (std::size_t y = 0; y < n; ++y) {
        long long const s     = decode(y, w);
        std::size_t     index = 0;
        std::size_t     scale = 1;
        for (std::size_t i = 0; i < d; ++i) {
          long long c = v[i];
          for (std::size_t j = 0; j < d; ++j) {
            c += a[i * d + j] * w[j];
          }
          index += static_cast<std::size_t>(c % m) * scale;
          scale *= static_cast<std::size_t>(m);
        }
        index += static_cast<std::size_t>((t + s) % L) * scale;
        table[x * n + y] = static_cast<Element>(index);
      }
    }

    CongruenceQuotient q(m, L, d, FiniteGroup::from_table(1, {0}),
                         GroupMap(1, {0}), GroupMap(1, {0}));
    std::vector<FiniteGroup::GeneratorLabel> gens;
    for (std::size_t i = 0; i < d; ++i) {
      PolyElement e{IntVector(d), 0};
      e.v[i] = 1;
      gens.emplace_back("x" + std::to_string(i + 1), q.project(e));
    }
    gens.emplace_back("t", q.project(PolyElement{IntVector(d), 1}));
    std::vector<std::string> names(n);
    for (std::size_t x = 0; x < n; ++x) {
      names[x] = q.lift(static_cast<Element>(x)).to_string();
    }
    q.group_ = FiniteGroup::from_table(n, std::move(table), std::move(gens),
                                       std::move(names));

    auto induced = [&](PolyAuto const& f) {
      std::vector<Element> image(n);
      for (std::size_t x = 0; x < n; ++x) {
        image[x] = q.project(f.apply(g, q.lift(static_cast<Element>(x))));
      }
      return validate_homomorphism(q.group_, q.group_,
                                   GroupMap(n, std::move(image)));
    };
    q.phi_ = induced(phi);
    q.psi_ = induced(psi);
    return q;
  }

  ////////////////////////////////////////////////////////////////////////
  // Decision procedure
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::yes:
        return "YES";
      case Verdict::no:
        return "NO";
      case Verdict::exhausted:
        return "EXHAUSTED";
    }
    return "?";
  }

  std::vector<PolyElement> shell(std::size_t d, long long radius) {
    std::vector<PolyElement> out;
    if (radius < 0) {
      return out;
    }
    std::vector<long long> coords(d + 1, -radius);
    while (true) {
      long long norm = 0;
      for (long long c : coords) {
        norm = std::max(norm, c < 0 ? -c : c);
      }
      if (norm == radius) {
        PolyElement p{IntVector(d), coords[d]};
        for (std::size_t i = 0; i < d; ++i) {
          p.v[i] = coords[i];
        }
        out.push_back(std::move(p));
      }
      // odometer with the last coordinate fastest: lexicographic order
      std::size_t i = d + 1;
      while (i > 0 && coords[i - 1] == radius) {
        coords[i - 1] = -radius;
        --i;
      }
      if (i == 0) {
        break;
      }
      ++coords[i - 1];
    }
    return out;
  }

  namespace {
    bool relation_holds(PolyGroup const& g, PolyAuto const& phi,
                        PolyAuto const& psi, PolyElement const& U,
                        PolyElement const& V, PolyElement const& gamma) {
      PolyElement const lhs
          = poly_multiply(g, poly_multiply(g, psi.apply(g, gamma), U),
                          poly_inverse(g, phi.apply(g, gamma)));
      return lhs == V;
    }
  }  // namespace

  Decision decide_twisted_conjugacy(PolyGroup const& g, PolyAuto const& phi,
                                    PolyAuto const& psi, PolyElement const& U,
                                    PolyElement const& V,
                                    DecisionBudget const& budget) {
    check_dimension(g.dimension(), U);
    check_dimension(g.dimension(), V);
    Decision result;
    bool     answered = false;

    auto run_shell = [&](long long r) {
      TranscriptStep step{"shell", r, "none", "", std::nullopt, 0};
      auto const     candidates = shell(g.dimension(), r);
      for (auto const& gamma : candidates) {
        if (relation_holds(g, phi, psi, U, V, gamma)) {
          step.outcome = "witness";
          step.witness = gamma;
          break;
        }
      }
      step.detail = std::to_string(candidates.size()) + " candidates";
      if (step.witness && !answered) {
        answered        = true;
        result.verdict  = Verdict::yes;
        result.witness  = step.witness;
      }
      result.transcript.push_back(std::move(step));
    };

    auto run_modulus = [&](long long m) {
      TranscriptStep step{"modulus", m, "", "", std::nullopt, 0};
      try {
        CongruenceQuotient const q = congruence_quotient(g, m, phi, psi);
        step.quotient_order        = q.group().order();
        Element const u            = q.project(U);
        Element const v            = q.project(V);
        auto const    w = is_twisted_conjugate(q.group(), q.phi(), q.psi(), u, v);
        if (w) {
          step.outcome = "not-separated";
          step.detail  = "witness " + q.group().element_name(*w);
        } else {
          step.outcome = "separated";
          step.detail  = "images " + q.group().element_name(u) + " and "
                        + q.group().element_name(v)
                        + " lie in different twisted classes";
          if (!answered) {
            answered       = true;
            result.verdict = Verdict::no;
            result.modulus = m;
          }
        }
      } catch (DoesNotRespect const& e) {
        step.outcome = "skipped";
        step.detail  = e.what();
      }
      result.transcript.push_back(std::move(step));
    };

    for (long long i = 0;; ++i) {
      bool progressed = false;
      if (i < budget.shells) {
        progressed = true;
        run_shell(i);
        if (answered && !budget.exhaustive) {
          break;
        }
      }
      if (2 + i <= budget.max_modulus) {
        progressed = true;
        run_modulus(2 + i);
        if (answered && !budget.exhaustive) {
          break;
        }
      }
      if (!progressed) {
        break;
      }
    }
    return result;
  }

  bool verify_decision(PolyGroup const& g, PolyAuto const& phi,
                       PolyAuto const& psi, PolyElement const& U,
                       PolyElement const& V, Decision const& d) {
    switch (d.verdict) {
      case Verdict::yes:
        return d.witness && relation_holds(g, phi, psi, U, V, *d.witness);
      case Verdict::no: {
        if (!d.modulus) {
          return false;
        }
        CongruenceQuotient const q = congruence_quotient(g, *d.modulus, phi, psi);
        return !is_twisted_conjugate(q.group(), q.phi(), q.psi(), q.project(U),
                                     q.project(V));
      }
      case Verdict::exhausted:
        return !d.witness && !d.modulus;
    }
    return false;
  }

  QuotientBound quotient_class_lower_bound(PolyGroup const& g,
                                           PolyAuto const&  phi,
                                           PolyAuto const&  psi,
                                           std::vector<long long> const& moduli) {
    QuotientBound b;
    for (long long m : moduli) {
      QuotientBoundRow row;
      row.modulus = m;
      try {
        CongruenceQuotient const q = congruence_quotient(g, m, phi, psi);
        row.respects               = true;
        row.order                  = q.group().order();
        row.classes = reidemeister_number(q.group(), q.phi(), q.psi());
        if (row.classes > b.bound) {
          b.bound       = row.classes;
          b.attained_at = m;
          b.stable_tail = 0;
        } else {
          ++b.stable_tail;
        }
      } catch (DoesNotRespect const& e) {
        row.reason = e.what();
      }
      b.table.push_back(std::move(row));
    }
    return b;
  }

  std::vector<IntMatrix> compatible_matrices(PolyGroup const& g, int eps,
                                             long long bound) {
    std::size_t const d       = g.dimension();
    std::size_t const entries = d * d;
    double const      count   = std::pow(static_cast<double>(2 * bound + 1),
                                         static_cast<double>(entries));
    if (count > 5e6) {
      throw Error("search space of " + std::to_string(count)
                  + " matrices is too large");
    }
    IntMatrix const        target = g.power(eps);
    std::vector<IntMatrix> out;
    std::vector<long long> e(entries, -bound);
    while (true) {
      IntMatrix M(d, d);
      for (std::size_t i = 0; i < entries; ++i) {
        M(i / d, i % d) = e[i];
      }
      if (M * g.action() == target * M && abs(M.determinant()) == 1) {
        out.push_back(M);
      }
      std::size_t i = entries;
      while (i > 0 && e[i - 1] == bound) {
        e[i - 1] = -bound;
        --i;
      }
      if (i == 0) {
        break;
      }
      ++e[i - 1];
    }
    return out;
  }

  PolyElement random_poly_element(std::size_t d, long long radius,
                                  std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> dist(-radius, radius);
    PolyElement                              p{IntVector(d), 0};
    for (auto& x : p.v) {
      x = dist(rng);
    }
    p.t = dist(rng);
    return p;
  }

}  // namespace bitwist
