#include "bitwist/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "bitwist/errors.hpp"

namespace bitwist {

  namespace {
    constexpr Element unset = static_cast<Element>(-1);

    // Elements reachable from the identity by right multiplication with gens.
    std::vector<bool> right_closure(std::size_t                 n,
                                    std::vector<Element> const& table,
                                    std::vector<Element> const& gens) {
      std::vector<bool>    seen(n, false);
      std::vector<Element> stack{0};
      seen[0] = true;
      while (!stack.empty()) {
        Element x = stack.back();
        stack.pop_back();
        for (Element s : gens) {
          Element y = table[static_cast<std::size_t>(x) * n + s];
          if (!seen[y]) {
            seen[y] = true;
            stack.push_back(y);
          }
        }
      }
      return seen;
    }

    std::vector<Element> greedy_generators(std::size_t                 n,
                                           std::vector<Element> const& table) {
      std::vector<Element> gens;
      std::vector<bool>    seen = right_closure(n, table, gens);
      for (Element x = 1; x < n; ++x) {
        if (!seen[x]) {
          gens.push_back(x);
          seen = right_closure(n, table, gens);
        }
      }
      return gens;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteGroup
  ////////////////////////////////////////////////////////////////////////

  FiniteGroup FiniteGroup::from_table(std::size_t                 order,
                                      std::vector<Element>        table,
                                      std::vector<GeneratorLabel> generators,
                                      std::vector<std::string> element_names) {
    std::size_t const n = order;
    if (n == 0) {
      throw InvalidGroupTable("group order must be positive");
    }
    if (table.size() != n * n) {
      throw InvalidGroupTable("table has " + std::to_string(table.size())
                              + " entries, expected "
                              + std::to_string(n * n));
    }
    for (Element x : table) {
      if (x >= n) {
        throw InvalidGroupTable("table entry " + std::to_string(x)
                                + " out of range");
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (table[x] != x || table[x * n] != x) {
        throw InvalidGroupTable("element 0 is not a two-sided identity");
      }
    }
    // Latin square; also yields inverses.
    std::vector<Element> inverse(n, unset);
    {
      std::vector<std::size_t> row_seen(n, n), col_seen(n, n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          Element r = table[x * n + y];
          Element c = table[y * n + x];
          if (row_seen[r] == x || col_seen[c] == x) {
            throw InvalidGroupTable("row or column " + std::to_string(x)
                                    + " is not a permutation");
          }
          row_seen[r] = x;
          col_seen[c] = x;
          if (r == 0) {
            inverse[x] = static_cast<Element>(y);
          }
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (table[inverse[x] * n + x] != 0) {
        throw InvalidGroupTable("left and right inverses differ");
      }
    }

    std::vector<Element> gens;
    if (generators.empty()) {
      gens = greedy_generators(n, table);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        generators.emplace_back("g" + std::to_string(i + 1), gens[i]);
      }
    } else {
      for (auto const& [label, x] : generators) {
        if (x >= n) {
          throw InvalidGroupTable("generator " + label + " out of range");
        }
        gens.push_back(x);
      }
      auto seen = right_closure(n, table, gens);
      if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw InvalidGroupTable("labelled generators do not generate");
      }
    }
    // Light's associativity test over the generating set.
    for (Element s : gens) {
      for (std::size_t x = 0; x < n; ++x) {
        Element xs = table[x * n + s];
        for (std::size_t y = 0; y < n; ++y) {
          if (table[xs * n + y] != table[x * n + table[s * n + y]]) {
            throw InvalidGroupTable("table is not associative at ("
                                    + std::to_string(x) + ","
                                    + std::to_string(s) + ","
                                    + std::to_string(y) + ")");
          }
        }
      }
    }
    if (!element_names.empty() && element_names.size() != n) {
      throw InvalidGroupTable("element name list has wrong length");
    }

    FiniteGroup g;
    g.order_      = n;
    g.table_      = std::move(table);
    g.inverse_    = std::move(inverse);
    g.generators_ = std::move(generators);
    g.names_      = std::move(element_names);
    return g;
  }

  std::string FiniteGroup::element_name(Element x) const {
    if (x < names_.size()) {
      return names_[x];
    }
    return std::to_string(x);
  }

  bool FiniteGroup::is_abelian() const {
    for (auto const& [label, s] : generators_) {
      for (auto const& [label2, t] : generators_) {
        if (mul(s, t) != mul(t, s)) {
          return false;
        }
      }
    }
    return true;
  }

  std::size_t FiniteGroup::element_order(Element x) const {
    std::size_t k = 1;
    for (Element y = x; y != 0; y = mul(y, x)) {
      ++k;
    }
    return k;
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutation groups
  ////////////////////////////////////////////////////////////////////////

  std::string cycle_notation(Permutation const& p) {
    std::string       out;
    std::vector<bool> done(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (done[i] || p[i] == i) {
        continue;
      }
      out += "(";
      std::size_t j = i;
      bool        first = true;
      while (!done[j]) {
        done[j] = true;
        out += (first ? "" : " ") + std::to_string(j);
        first = false;
        j     = p[j];
      }
      out += ")";
    }
    return out.empty() ? "()" : out;
  }

  FiniteGroup group_from_permutations(std::vector<Permutation> const& generators,
                                      std::size_t                     cap) {
    std::size_t const degree = generators.empty() ? 0 : generators[0].size();
    for (auto const& p : generators) {
      if (p.size() != degree) {
        throw InvalidPermutation("generators act on different point sets");
      }
      std::vector<bool> hit(degree, false);
      for (auto x : p) {
        if (x >= degree || hit[x]) {
          throw InvalidPermutation("not a bijection: " + cycle_notation(p));
        }
        hit[x] = true;
      }
    }
    if (cap == 0) {
      throw ClosureExceeded(cap);
    }

    Permutation id(degree);
    std::iota(id.begin(), id.end(), 0u);
    auto compose_then = [](Permutation const& a, Permutation const& b) {
      Permutation c(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        c[i] = b[a[i]];
      }
      return c;
    };

    // BFS over the right Cayley graph; parent/gen record a spanning tree.
    std::vector<Permutation>      elements{id};
    std::map<Permutation, Element> index{{id, 0}};
    std::size_t const             k = generators.size();
    std::vector<Element>          right;  // right[x*k+s] = x*gen_s
    std::vector<Element>          parent{0}, via{0};
    for (std::size_t x = 0; x < elements.size(); ++x) {
      for (std::size_t s = 0; s < k; ++s) {
        Permutation y  = compose_then(elements[x], generators[s]);
        auto        it = index.find(y);
        Element     yi;
        if (it == index.end()) {
          if (elements.size() >= cap) {
            throw ClosureExceeded(cap);
          }
          yi = static_cast<Element>(elements.size());
          index.emplace(y, yi);
          elements.push_back(std::move(y));
          parent.push_back(static_cast<Element>(x));
          via.push_back(static_cast<Element>(s));
        } else {
          yi = it->second;
        }
        right.push_back(yi);
      }
    }

    std::size_t const    n = elements.size();
    std::vector<Element> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      table[x * n] = static_cast<Element>(x);
      // BFS order guarantees parent[y] < y.
      for (std::size_t y = 1; y < n; ++y) {
        Element left  = table[x * n + parent[y]];
        table[x * n + y] = right[static_cast<std::size_t>(left) * k + via[y]];
      }
    }

    std::vector<FiniteGroup::GeneratorLabel> labels;
    for (std::size_t s = 0; s < k; ++s) {
      labels.emplace_back("g" + std::to_string(s + 1),
                          index.at(generators[s]));
    }
    std::vector<std::string> names;
    names.reserve(n);
    for (auto const& p : elements) {
      names.push_back(cycle_notation(p));
    }
    return FiniteGroup::from_table(n, std::move(table), std::move(labels),
                                   std::move(names));
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupMap
  ////////////////////////////////////////////////////////////////////////

  GroupMap::GroupMap(std::size_t codomain_order, std::vector<Element> image)
      : codomain_order_(codomain_order), image_(std::move(image)) {}

  GroupMap GroupMap::identity(FiniteGroup const& g) {
    std::vector<Element> image(g.order());
    std::iota(image.begin(), image.end(), Element{0});
    GroupMap m(g.order(), std::move(image));
    m.validated_ = true;
    m.bijective_ = true;
    return m;
  }

  GroupMap GroupMap::trivial(FiniteGroup const& domain,
                             FiniteGroup const& codomain) {
    GroupMap m(codomain.order(), std::vector<Element>(domain.order(), 0));
    m.validated_ = true;
    m.bijective_ = codomain.order() == 1;
    return m;
  }

  GroupMap validate_homomorphism(FiniteGroup const& domain,
                                 FiniteGroup const& codomain,
                                 GroupMap           m) {
    if (m.image_.size() != domain.order()) {
      throw InvalidMap("image table has " + std::to_string(m.image_.size())
                       + " entries, domain has order "
                       + std::to_string(domain.order()));
    }
    if (m.codomain_order_ != codomain.order()) {
      throw InvalidMap("codomain order mismatch");
    }
    for (Element x : m.image_) {
      if (x >= codomain.order()) {
        throw InvalidMap("image entry " + std::to_string(x) + " out of range");
      }
    }
    std::size_t const n = domain.order();
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (m.image_[domain.mul(x, y)]
            != codomain.mul(m.image_[x], m.image_[y])) {
          throw NotHomomorphism(x, y);
        }
      }
    }
    std::vector<bool> hit(codomain.order(), false);
    std::size_t       distinct = 0;
    for (Element x : m.image_) {
      if (!hit[x]) {
        hit[x] = true;
        ++distinct;
      }
    }
    m.bijective_ = distinct == n && n == codomain.order();
    m.validated_ = true;
    return m;
  }

  GroupMap extend_from_generators(FiniteGroup const&          domain,
                                  FiniteGroup const&          codomain,
                                  std::vector<Element> const& generator_images) {
    auto const& gens = domain.generators();
    if (generator_images.size() != gens.size()) {
      throw InvalidMap("expected " + std::to_string(gens.size())
                       + " generator images, got "
                       + std::to_string(generator_images.size()));
    }
    for (Element x : generator_images) {
      if (x >= codomain.order()) {
        throw InvalidMap("generator image out of range");
      }
    }
    std::vector<Element> image(domain.order(), unset);
    image[0] = 0;
    std::deque<Element> queue{0};
    while (!queue.empty()) {
      Element x = queue.front();
      queue.pop_front();
      for (std::size_t s = 0; s < gens.size(); ++s) {
        Element y    = domain.mul(x, gens[s].second);
        Element want = codomain.mul(image[x], generator_images[s]);
        if (image[y] == unset) {
          image[y] = want;
          queue.push_back(y);
        } else if (image[y] != want) {
          throw NotHomomorphism(x, gens[s].second);
        }
      }
    }
    return validate_homomorphism(domain, codomain,
                                 GroupMap(codomain.order(), std::move(image)));
  }

  GroupMap inner_automorphism(FiniteGroup const& g, Element conjugator) {
    std::vector<Element> image(g.order());
    Element const        ginv = g.inv(conjugator);
    for (Element x = 0; x < g.order(); ++x) {
      image[x] = g.mul(g.mul(conjugator, x), ginv);
    }
    return validate_homomorphism(g, g, GroupMap(g.order(), std::move(image)));
  }

  std::vector<GroupMap> automorphisms(FiniteGroup const& g) {
    auto const&              gens = g.generators();
    std::size_t const        k    = gens.size();
    std::vector<std::size_t> orders(k);
    for (std::size_t s = 0; s < k; ++s) {
      orders[s] = g.element_order(gens[s].second);
    }
    std::vector<std::vector<Element>> candidates(k);
    for (std::size_t s = 0; s < k; ++s) {
      for (Element x = 0; x < g.order(); ++x) {
        if (g.element_order(x) == orders[s]) {
          candidates[s].push_back(x);
        }
      }
    }
    std::vector<GroupMap>    result{GroupMap::identity(g)};
    std::vector<std::size_t> pick(k, 0);
    std::vector<Element>     images(k);
    while (true) {
      for (std::size_t s = 0; s < k; ++s) {
        images[s] = candidates[s][pick[s]];
      }
      bool is_identity = true;
      for (std::size_t s = 0; s < k; ++s) {
        is_identity = is_identity && images[s] == gens[s].second;
      }
      if (!is_identity) {
        try {
          auto m = extend_from_generators(g, g, images);
          if (m.is_bijective()) {
            result.push_back(std::move(m));
          }
        } catch (NotHomomorphism const&) {
        }
      }
      std::size_t s = 0;
      while (s < k && ++pick[s] == candidates[s].size()) {
        pick[s] = 0;
        ++s;
      }
      if (s == k) {
        break;
      }
    }
    return result;
  }

  GroupMap compose(GroupMap const& outer, GroupMap const& inner) {
    if (inner.codomain_order() != outer.domain_order()) {
      throw InvalidMap("compose: shape mismatch");
    }
    std::vector<Element> image(inner.domain_order());
    for (Element x = 0; x < image.size(); ++x) {
      image[x] = outer(inner(x));
    }
    return GroupMap(outer.codomain_order(), std::move(image));
  }

  ////////////////////////////////////////////////////////////////////////
  // Twisted conjugacy
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check_endo_shape(FiniteGroup const& g, GroupMap const& m) {
      if (m.domain_order() != g.order() || m.codomain_order() != g.order()) {
        throw InvalidMap("map is not an endomorphism of a group of order "
                         + std::to_string(g.order()));
      }
    }
  }  // namespace

  TwistedPartition twisted_classes(FiniteGroup const& g,
                                   GroupMap const&    phi,
                                   GroupMap const&    psi) {
    check_endo_shape(g, phi);
    check_endo_shape(g, psi);
    std::size_t const n = g.order();
    // The orbit of x under the action is {psi(c) x phi(c)^-1 : c in G}.
    std::vector<Element> phi_inv(n);
    for (Element c = 0; c < n; ++c) {
      phi_inv[c] = g.inv(phi(c));
    }
    TwistedPartition p;
    p.class_of.assign(n, static_cast<std::size_t>(-1));
    for (Element x = 0; x < n; ++x) {
      if (p.class_of[x] != static_cast<std::size_t>(-1)) {
        continue;
      }
      std::size_t const    id = p.classes.size();
      std::vector<Element> cls;
      for (Element c = 0; c < n; ++c) {
        Element y = g.mul(g.mul(psi(c), x), phi_inv[c]);
        if (p.class_of[y] != id) {
          p.class_of[y] = id;
          cls.push_back(y);
        }
      }
      std::sort(cls.begin(), cls.end());
      p.reps.push_back(x);
      p.classes.push_back(std::move(cls));
    }
    return p;
  }

  std::size_t reidemeister_number(FiniteGroup const& g,
                                  GroupMap const&    phi,
                                  GroupMap const&    psi) {
    return twisted_classes(g, phi, psi).size();
  }

  std::optional<Element> is_twisted_conjugate(FiniteGroup const& g,
                                              GroupMap const&    phi,
                                              GroupMap const&    psi,
                                              Element            x,
                                              Element            y) {
    check_endo_shape(g, phi);
    check_endo_shape(g, psi);
    for (Element c = 0; c < g.order(); ++c) {
      if (g.mul(g.mul(psi(c), x), g.inv(phi(c))) == y) {
        return c;
      }
    }
    return std::nullopt;
  }

  TwistedPartition conjugacy_classes(FiniteGroup const& g) {
    auto id = GroupMap::identity(g);
    return twisted_classes(g, id, id);
  }

}  // namespace bitwist
