#include "bitwist/abelian.hpp"

#include <functional>

#include "bitwist/errors.hpp"
#include "bitwist/smith.hpp"

namespace bitwist {

  using boost::multiprecision::abs;

  ////////////////////////////////////////////////////////////////////////
  // FgAbelianGroup
  ////////////////////////////////////////////////////////////////////////

  FgAbelianGroup::FgAbelianGroup(IntVector invariants, std::size_t free_rank)
      : free_rank_(free_rank) {
    for (auto& d : invariants) {
      if (d < 1) {
        throw InvalidInvariants("invariant factor " + d.str()
                                + " is not positive");
      }
      if (d != 1) {
        invariants_.push_back(std::move(d));
      }
    }
    for (std::size_t i = 0; i + 1 < invariants_.size(); ++i) {
      if (invariants_[i + 1] % invariants_[i] != 0) {
        throw InvalidInvariants(invariants_[i].str() + " does not divide "
                                + invariants_[i + 1].str());
      }
    }
  }

  Integer FgAbelianGroup::order() const {
    if (!is_finite()) {
      throw Error("group " + to_string() + " is infinite");
    }
    Integer n = 1;
    for (auto const& d : invariants_) {
      n *= d;
    }
    return n;
  }

  IntVector FgAbelianGroup::reduce(IntVector x) const {
    if (x.size() != dimension()) {
      throw DimensionMismatch("element has length " + std::to_string(x.size())
                              + ", group dimension is "
                              + std::to_string(dimension()));
    }
    for (std::size_t i = 0; i < invariants_.size(); ++i) {
      x[i] = mod(x[i], invariants_[i]);
    }
    return x;
  }

  std::string FgAbelianGroup::to_string() const {
    std::string out;
    for (auto const& d : invariants_) {
      out += (out.empty() ? "Z_" : " + Z_") + d.str();
    }
    if (free_rank_ != 0) {
      out += (out.empty() ? "Z^" : " + Z^") + std::to_string(free_rank_);
    }
    return out.empty() ? "0" : out;
  }

  ////////////////////////////////////////////////////////////////////////
  // AbelianHom
  ////////////////////////////////////////////////////////////////////////

  AbelianHom::AbelianHom(FgAbelianGroup const& g, IntMatrix m)
      : group_(g), matrix_(std::move(m)) {
    std::size_t const n = g.dimension();
    std::size_t const k = g.torsion_rank();
    if (matrix_.rows() != n || matrix_.cols() != n) {
      throw DimensionMismatch("endomorphism matrix must be "
                              + std::to_string(n) + "x" + std::to_string(n));
    }
    auto const& d = g.invariants();
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        bool ok = i < k ? (d[j] * matrix_(i, j)) % d[i] == 0
                        : matrix_(i, j) == 0;
        if (!ok) {
          throw NotWellDefined("entry (" + std::to_string(i) + ","
                               + std::to_string(j)
                               + ") does not respect the relations of "
                               + g.to_string());
        }
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        matrix_(i, j) = mod(matrix_(i, j), d[i]);
      }
    }
  }

  AbelianHom AbelianHom::identity(FgAbelianGroup const& g) {
    return AbelianHom(g, IntMatrix::identity(g.dimension()));
  }

  AbelianHom AbelianHom::scalar(FgAbelianGroup const& g, Integer const& c) {
    return AbelianHom(g, IntMatrix::diagonal(IntVector(g.dimension(), c)));
  }

  IntVector AbelianHom::apply(IntVector const& x) const {
    return group_.reduce(matrix_ * group_.reduce(x));
  }

  ////////////////////////////////////////////////////////////////////////
  // Reidemeister number
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check_same_group(AbelianHom const& phi, AbelianHom const& psi) {
      if (!(phi.group() == psi.group())) {
        throw DimensionMismatch("endomorphisms of different groups");
      }
    }

    IntMatrix relation_columns(FgAbelianGroup const& g) {
      IntVector diag(g.dimension());
      for (std::size_t i = 0; i < g.torsion_rank(); ++i) {
        diag[i] = g.invariants()[i];
      }
      return IntMatrix::diagonal(diag);
    }
  }  // namespace

  std::vector<IntVector> twisted_class_subgroup(AbelianHom const& phi,
                                                AbelianHom const& psi) {
    check_same_group(phi, psi);
    IntMatrix const        diff = psi.matrix() - phi.matrix();
    std::vector<IntVector> gens;
    for (std::size_t j = 0; j < diff.cols(); ++j) {
      gens.push_back(phi.group().reduce(diff.column(j)));
    }
    return gens;
  }

  CountOrInfinite reidemeister_abelian(AbelianHom const& phi,
                                       AbelianHom const& psi) {
    check_same_group(phi, psi);
    auto const&     g    = phi.group();
    IntMatrix const diff = psi.matrix() - phi.matrix();
    SmithForm const s    = smith_normal_form(hconcat(diff, relation_columns(g)));
    if (s.rank() < g.dimension()) {
      return CountOrInfinite::infinity();
    }
    Integer index = 1;
    for (auto const& x : s.diagonal()) {
      if (x != 0) {
        index *= x;
      }
    }
    return {false, index};
  }

  ////////////////////////////////////////////////////////////////////////
  // Dual
  ////////////////////////////////////////////////////////////////////////

  FgAbelianGroup dual_group(FgAbelianGroup const& g) {
    if (!g.is_finite()) {
      throw InfiniteDual();
    }
    return g;
  }

  Rational character_phase(FgAbelianGroup const& g, DualCharacter const& chi,
                           IntVector const& x) {
    if (!g.is_finite()) {
      throw InfiniteDual();
    }
    if (chi.y.size() != g.dimension() || x.size() != g.dimension()) {
      throw DimensionMismatch("character or element has wrong length");
    }
    Rational phase = 0;
    for (std::size_t i = 0; i < g.torsion_rank(); ++i) {
      phase += Rational(x[i] * chi.y[i], g.invariants()[i]);
    }
    // reduce into [0, 1)
    Integer whole = numerator(phase) / denominator(phase);
    phase -= whole;
    if (phase < 0) {
      phase += 1;
    }
    return phase;
  }

  AbelianHom induced_dual_map(AbelianHom const& phi) {
    auto const& g = phi.group();
    if (!g.is_finite()) {
      throw InfiniteDual();
    }
    auto const&       d = g.invariants();
    std::size_t const k = g.torsion_rank();
    IntMatrix         n(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < k; ++i) {
        Integer num = phi.matrix()(i, j) * d[j];
        // well-definedness guarantees exact division
        n(j, i) = num / d[i];
      }
    }
    return AbelianHom(g, std::move(n));
  }

  Integer dual_coincidence_count(AbelianHom const& phi, AbelianHom const& psi) {
    check_same_group(phi, psi);
    auto const& g = phi.group();
    if (!g.is_finite()) {
      throw InfiniteDual();
    }
    std::size_t const k = g.torsion_rank();
    if (k == 0) {
      return 1;
    }
    IntMatrix const n
        = induced_dual_map(phi).matrix() - induced_dual_map(psi).matrix();
    // Integer kernel of [N | D]: the trailing columns of V. Their top halves
    // span L = {y : N y in D Z^k}, and the kernel on the dual is L / D Z^k.
    SmithForm const   s      = smith_normal_form(hconcat(n, relation_columns(g)));
    std::size_t const rank   = s.rank();
    std::size_t const kernel = 2 * k - rank;
    IntMatrix         basis(k, kernel);
    for (std::size_t c = 0; c < kernel; ++c) {
      for (std::size_t i = 0; i < k; ++i) {
        basis(i, c) = s.V(i, rank + c);
      }
    }
    if (kernel != k) {
      throw Error("kernel lattice has unexpected rank");
    }
    Integer const lattice_index = abs(basis.determinant());
    return g.order() / lattice_index;
  }

  ////////////////////////////////////////////////////////////////////////
  // Realization
  ////////////////////////////////////////////////////////////////////////

  std::size_t element_index(FgAbelianGroup const& g, IntVector const& x) {
    IntVector const r     = g.reduce(x);
    std::size_t     index = 0;
    std::size_t     scale = 1;
    for (std::size_t i = 0; i < g.torsion_rank(); ++i) {
      index += static_cast<std::size_t>(r[i]) * scale;
      scale *= static_cast<std::size_t>(g.invariants()[i]);
    }
    return index;
  }

  IntVector element_vector(FgAbelianGroup const& g, std::size_t index) {
    IntVector x(g.dimension());
    for (std::size_t i = 0; i < g.torsion_rank(); ++i) {
      auto const d = static_cast<std::size_t>(g.invariants()[i]);
      x[i]         = index % d;
      index /= d;
    }
    return x;
  }

  FiniteGroup realize(FgAbelianGroup const& g) {
    auto const n = static_cast<std::size_t>(g.order());
    std::vector<IntVector>   elements(n);
    std::vector<std::string> names(n);
    for (std::size_t x = 0; x < n; ++x) {
      elements[x] = element_vector(g, x);
      names[x]    = to_string(elements[x]);
    }
    std::vector<Element> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        IntVector sum(g.dimension());
        for (std::size_t i = 0; i < sum.size(); ++i) {
          sum[i] = elements[x][i] + elements[y][i];
        }
        table[x * n + y] = static_cast<Element>(element_index(g, sum));
      }
    }
    std::vector<FiniteGroup::GeneratorLabel> gens;
    for (std::size_t i = 0; i < g.torsion_rank(); ++i) {
      IntVector e(g.dimension());
      e[i] = 1;
      gens.emplace_back("e" + std::to_string(i + 1),
                        static_cast<Element>(element_index(g, e)));
    }
    return FiniteGroup::from_table(n, std::move(table), std::move(gens),
                                   std::move(names));
  }

  GroupMap realize(FiniteGroup const& realized, AbelianHom const& phi) {
    auto const&          g = phi.group();
    std::vector<Element> image(realized.order());
    for (std::size_t x = 0; x < image.size(); ++x) {
      image[x] = static_cast<Element>(
          element_index(g, phi.apply(element_vector(g, x))));
    }
    return validate_homomorphism(realized, realized,
                                 GroupMap(realized.order(), std::move(image)));
  }

  BfReport verify_bitwisted_bf(AbelianHom const& phi, AbelianHom const& psi) {
    check_same_group(phi, psi);
    auto const& g = phi.group();
    if (!g.is_finite()) {
      throw InfiniteDual();
    }
    FiniteGroup const     realized = realize(g);
    BfReport              r;
    r.group       = g.to_string();
    r.orbit_count = reidemeister_number(realized, realize(realized, phi),
                                        realize(realized, psi));
    r.index        = reidemeister_abelian(phi, psi).value;
    r.coincidences = dual_coincidence_count(phi, psi);
    r.pass = r.orbit_count == r.index && r.index == r.coincidences;
    r.detail = r.orbit_count.str() + (r.orbit_count == r.index ? " = " : " != ")
               + r.index.str() + (r.index == r.coincidences ? " = " : " != ")
               + r.coincidences.str();
    return r;
  }

  std::vector<FgAbelianGroup> abelian_groups_of_order(unsigned n) {
    std::vector<FgAbelianGroup> out;
    if (n == 0) {
      return out;
    }
    std::vector<Integer>                                    chain;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned prev,
                                                      unsigned rest) {
      if (rest == 1) {
        out.emplace_back(IntVector(chain.begin(), chain.end()), 0);
        return;
      }
      for (unsigned d = prev; d <= rest; d += prev) {
        if (d >= 2 && rest % d == 0) {
          chain.push_back(d);
          rec(d, rest / d);
          chain.pop_back();
        }
      }
    };
    rec(1, n);
    return out;
  }

  AbelianHom random_endomorphism(FgAbelianGroup const& g,
                                 std::mt19937_64&      rng) {
    std::size_t const n = g.dimension();
    std::size_t const k = g.torsion_rank();
    auto const&       d = g.invariants();
    IntMatrix         m(n, n);
    auto uniform = [&rng](long long lo, long long hi) {
      return std::uniform_int_distribution<long long>(lo, hi)(rng);
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i < k && j < k) {
          Integer const step = d[i] / gcd(d[i], d[j]);
          auto const    top  = static_cast<long long>(d[i] / step) - 1;
          m(i, j)            = step * uniform(0, top);
        } else if (i < k) {
          m(i, j) = uniform(0, static_cast<long long>(d[i]) - 1);
        } else if (j >= k) {
          m(i, j) = uniform(-3, 3);
        }
      }
    }
    return AbelianHom(g, std::move(m));
  }

}  // namespace bitwist
