#include "bitwist/baumslag.hpp"

#include <limits>

#include "bitwist/errors.hpp"

namespace bitwist {

  namespace {
    void require_same_base(long long n1, long long n2) {
      if (n1 != n2) {
        throw BaseMismatch(n1, n2);
      }
    }

    long long to_exponent(Integer const& k) {
      if (k > std::numeric_limits<long long>::max()
          || k < std::numeric_limits<long long>::min()) {
        throw Error("exponent of a out of range: " + k.str());
      }
      return static_cast<long long>(k);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // ZOneOverN
  ////////////////////////////////////////////////////////////////////////

  ZOneOverN::ZOneOverN(long long base, Integer numerator, unsigned exponent)
      : base_(base), numerator_(std::move(numerator)), exponent_(exponent) {
    if (base < 2) {
      throw Error("Z[1/n] needs n >= 2, got " + std::to_string(base));
    }
    normalize();
  }

  void ZOneOverN::normalize() {
    if (numerator_ == 0) {
      exponent_ = 0;
      return;
    }
    while (exponent_ > 0 && numerator_ % base_ == 0) {
      numerator_ /= base_;
      --exponent_;
    }
  }

  ZOneOverN ZOneOverN::scaled(long long power) const {
    ZOneOverN r = *this;
    if (power < 0) {
      r.exponent_ += static_cast<unsigned>(-power);
    } else {
      auto const p = static_cast<unsigned long long>(power);
      if (p <= r.exponent_) {
        r.exponent_ -= static_cast<unsigned>(p);
      } else {
        r.numerator_ *= ipow(base_, static_cast<unsigned>(p - r.exponent_));
        r.exponent_ = 0;
      }
    }
    r.normalize();
    return r;
  }

  ZOneOverN ZOneOverN::operator-() const {
    ZOneOverN r = *this;
    r.numerator_ = -r.numerator_;
    return r;
  }

  ZOneOverN operator+(ZOneOverN const& a, ZOneOverN const& b) {
    require_same_base(a.base_, b.base_);
    unsigned const e = std::max(a.exponent_, b.exponent_);
    Integer const  num
        = a.numerator_ * ipow(a.base_, e - a.exponent_)
          + b.numerator_ * ipow(b.base_, e - b.exponent_);
    return ZOneOverN(a.base_, num, e);
  }

  ZOneOverN operator-(ZOneOverN const& a, ZOneOverN const& b) {
    return a + (-b);
  }

  ZOneOverN operator*(ZOneOverN const& a, Integer const& c) {
    return ZOneOverN(a.base_, a.numerator_ * c, a.exponent_);
  }

  std::string ZOneOverN::to_string() const {
    if (exponent_ == 0) {
      return numerator_.str();
    }
    return numerator_.str() + "/" + ipow(base_, exponent_).str();
  }

  std::string BSElement::to_string() const {
    return "(" + x.to_string() + ", " + std::to_string(t) + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // Group law
  ////////////////////////////////////////////////////////////////////////

  BSElement bs_multiply(BSElement const& p, BSElement const& q) {
    require_same_base(p.base(), q.base());
    return {p.x + q.x.scaled(-p.t), p.t + q.t};
  }

  BSElement bs_inverse(BSElement const& p) {
    return {(-p.x).scaled(p.t), -p.t};
  }

  BSElement bs_power(BSElement const& p, Integer k) {
    BSElement base = p;
    if (k < 0) {
      base = bs_inverse(p);
      k    = -k;
    }
    if (base.t == 0) {
      return {base.x * k, 0};
    }
    BSElement result = BSElement::identity(p.base());
    while (k != 0) {
      if ((k & 1) != 0) {
        result = bs_multiply(result, base);
      }
      k >>= 1;
      if (k != 0) {
        base = bs_multiply(base, base);
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  BSWord BSWord::normalized() const {
    BSWord out;
    for (auto const& [letter, exp] : syllables) {
      if (!out.syllables.empty() && out.syllables.back().first == letter) {
        out.syllables.back().second += exp;
        if (out.syllables.back().second == 0) {
          out.syllables.pop_back();
        }
      } else if (exp != 0) {
        out.syllables.emplace_back(letter, exp);
      }
    }
    return out;
  }

  std::string BSWord::to_string() const {
    std::string out;
    for (auto const& [letter, exp] : syllables) {
      if (!out.empty()) {
        out += " ";
      }
      out += letter;
      if (exp != 1) {
        out += "^" + exp.str();
      }
    }
    return out;
  }

  BSElement embed_word(BSWord const& w, long long n) {
    BSElement result = BSElement::identity(n);
    for (auto const& [letter, exp] : w.syllables) {
      BSElement syllable = BSElement::identity(n);
      if (letter == 'a') {
        syllable = {ZOneOverN(n), to_exponent(exp)};
      } else if (letter == 'b') {
        syllable = {ZOneOverN(n, exp), 0};
      } else {
        throw Error(std::string("unknown generator '") + letter
                    + "' in a B(1,n) word");
      }
      result = bs_multiply(result, syllable);
    }
    return result;
  }

  Integer a_exponent(BSWord const& w) {
    Integer sum = 0;
    for (auto const& [letter, exp] : w.syllables) {
      if (letter == 'a') {
        sum += exp;
      }
    }
    return sum;
  }

  ////////////////////////////////////////////////////////////////////////
  // Endomorphisms
  ////////////////////////////////////////////////////////////////////////

  BSElement BSEndo::apply(BSElement const& g) const {
    require_same_base(g.base(), n);
    auto const e     = static_cast<long long>(g.x.exponent());
    BSElement  conj  = bs_power(image_a, e);
    BSElement  fiber = bs_multiply(bs_multiply(conj, bs_power(image_b, g.x.numerator())),
                                   bs_inverse(conj));
    return bs_multiply(fiber, bs_power(image_a, g.t));
  }

  BSEndo validate_bs_endo(long long n, BSElement image_a, BSElement image_b) {
    require_same_base(n, image_a.base());
    require_same_base(n, image_b.base());
    if (image_b.t != 0) {
      throw ImageOfBNotInKernel("image of b " + image_b.to_string()
                                + " has nonzero a-exponent");
    }
    BSElement const lhs = bs_multiply(
        bs_multiply(bs_inverse(image_a), image_b), image_a);
    BSElement const rhs = bs_power(image_b, n);
    if (!(lhs == rhs)) {
      throw RelationViolated("phi(a)^-1 phi(b) phi(a) = " + lhs.to_string()
                             + " but phi(b)^n = " + rhs.to_string());
    }
    return BSEndo{n, std::move(image_a), std::move(image_b)};
  }

  long long induced_degree(BSEndo const& e) {
    return e.image_a.t;
  }

  DegreeCheck degree_constraint_check(BSEndo const& e) {
    ZOneOverN const& d   = e.image_b.x;
    ZOneOverN const  lhs = d.scaled(1);
    ZOneOverN const  rhs = d.scaled(induced_degree(e));
    return lhs == rhs ? DegreeCheck::consistent : DegreeCheck::violated;
  }

  BSElement random_bs_element(long long n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-50, 50);
    std::uniform_int_distribution<unsigned>  exp(0, 4);
    std::uniform_int_distribution<long long> t(-6, 6);
    ZOneOverN x(n, num(rng), exp(rng));
    return {x, t(rng)};
  }

  InfinitudeCertificate infinitude_certificate(long long n, BSEndo const& phi,
                                               BSEndo const& psi,
                                               std::uint64_t seed,
                                               std::size_t   checks) {
    BSEndo const f = validate_bs_endo(n, phi.image_a, phi.image_b);
    BSEndo const g = validate_bs_endo(n, psi.image_a, psi.image_b);
    if (f.image_b.x.is_zero() || g.image_b.x.is_zero()) {
      throw NotInjectiveAdmissible(
          "image of b is trivial, so the endomorphism is not injective");
    }
    InfinitudeCertificate c;
    c.n          = n;
    c.degree_phi = induced_degree(f);
    c.degree_psi = induced_degree(g);
    if (degree_constraint_check(f) != DegreeCheck::consistent
        || degree_constraint_check(g) != DegreeCheck::consistent) {
      throw NotInjectiveAdmissible("degree constraint n d = d n^k fails");
    }
    c.invariant
        = "|psi(g) x phi(g)^-1|_a = |x|_a + (" + std::to_string(c.degree_psi)
          + " - " + std::to_string(c.degree_phi) + ")|g|_a = |x|_a";
    c.witness_radius = 5;
    for (long long m = -c.witness_radius; m <= c.witness_radius; ++m) {
      c.witnesses.push_back({ZOneOverN(n), m});
    }
    c.seed = seed;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < checks; ++i) {
      BSElement const x     = random_bs_element(n, rng);
      BSElement const gamma = random_bs_element(n, rng);
      BSElement const moved = bs_multiply(
          bs_multiply(g.apply(gamma), x), bs_inverse(f.apply(gamma)));
      ++c.checks_run;
      bool const predicted
          = moved.t == x.t + (c.degree_psi - c.degree_phi) * gamma.t;
      if (predicted && moved.t == x.t) {
        ++c.checks_passed;
      }
    }
    return c;
  }

}  // namespace bitwist
