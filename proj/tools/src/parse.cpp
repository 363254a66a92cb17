#include "bitwist_cli/parse.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace bitwist::cli {

  ParseError::ParseError(std::size_t line, std::size_t column,
                         std::string expected, std::string found)
      : InputError("parse error at line " + std::to_string(line) + ", column "
                   + std::to_string(column) + ": expected " + expected
                   + (found.empty() ? "" : ", found " + found)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  UnknownGenerator::UnknownGenerator(std::size_t line, std::size_t column,
                                     std::string label, std::string expected)
      : ParseError(line, column, std::move(expected),
                   "unknown generator '" + label + "'"),
        label_(std::move(label)) {}

  std::string to_string(GroupKind k) {
    switch (k) {
      case GroupKind::finite_perm:
        return "finite-perm";
      case GroupKind::finite_table:
        return "finite-table";
      case GroupKind::abelian:
        return "abelian";
      case GroupKind::bs:
        return "bs";
      case GroupKind::poly:
        return "poly";
    }
    return "?";
  }

  namespace {

    ////////////////////////////////////////////////////////////////////
    // Lexing
    ////////////////////////////////////////////////////////////////////

    class Cursor {
     public:
      explicit Cursor(std::string const& text) : text_(&text) {}

      bool at_end() const { return pos_ >= text_->size(); }
      char peek() const { return at_end() ? '\0' : (*text_)[pos_]; }
      char get() {
        char const c = (*text_)[pos_++];
        if (c == '\n') {
          ++line_;
          col_ = 1;
        } else {
          ++col_;
        }
        return c;
      }
      // whitespace and '#' comments
      void skip_ws() {
        while (!at_end()) {
          if (std::isspace(static_cast<unsigned char>(peek())) != 0) {
            get();
          } else if (peek() == '#') {
            while (!at_end() && peek() != '\n') {
              get();
            }
          } else {
            break;
          }
        }
      }
      bool skip_blanks() {  // spaces only, no newlines or comments
        bool any = false;
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) {
          get();
          any = true;
        }
        return any;
      }
      std::size_t line() const { return line_; }
      std::size_t col() const { return col_; }

      std::string found() const {
        if (at_end()) {
          return "end of input";
        }
        return std::string("'") + peek() + "'";
      }
      [[noreturn]] void fail(std::string const& expected) const {
        throw ParseError(line_, col_, expected, found());
      }

     private:
      std::string const* text_;
      std::size_t        pos_  = 0;
      std::size_t        line_ = 1;
      std::size_t        col_  = 1;
    };

    bool is_letter(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) != 0;
    }
    bool is_digit(char c) {
      return std::isdigit(static_cast<unsigned char>(c)) != 0;
    }
    bool is_name_char(char c) {
      return is_letter(c) || is_digit(c) || c == '-' || c == '_';
    }

    struct Value {
      enum class Kind { integer, name, list, cycles } kind = Kind::integer;
      Integer                                 number;
      std::string                             name;
      std::vector<Value>                      items;
      std::vector<std::vector<unsigned long>> cycles;
      std::size_t                             line = 0;
      std::size_t                             col  = 0;

      [[noreturn]] void fail(std::string const& expected) const {
        throw ParseError(line, col, expected, describe());
      }
      std::string describe() const {
        switch (kind) {
          case Kind::integer:
            return "integer " + number.str();
          case Kind::name:
            return "'" + name + "'";
          case Kind::list:
            return "a list";
          case Kind::cycles:
            return "a permutation";
        }
        return "?";
      }
    };

    Integer read_integer(Cursor& c) {
      std::string digits;
      if (c.peek() == '-' || c.peek() == '+') {
        digits += c.get();
      }
      if (!is_digit(c.peek())) {
        c.fail("digits");
      }
      while (is_digit(c.peek())) {
        digits += c.get();
      }
      return Integer(digits);
    }

    std::string read_name(Cursor& c) {
      std::string s;
      while (is_name_char(c.peek())) {
        s += c.get();
      }
      return s;
    }

    Value parse_value(Cursor& c);

    Value parse_list(Cursor& c) {
      Value v;
      v.kind = Value::Kind::list;
      c.get();  // '['
      c.skip_ws();
      if (c.peek() == ']') {
        c.get();
        return v;
      }
      while (true) {
        v.items.push_back(parse_value(c));
        c.skip_ws();
        if (c.peek() == ',') {
          c.get();
          continue;
        }
        if (c.peek() == ']') {
          c.get();
          return v;
        }
        c.fail("',' or ']'");
      }
    }

    Value parse_cycles(Cursor& c) {
      Value v;
      v.kind = Value::Kind::cycles;
      while (c.peek() == '(') {
        c.get();
        std::vector<unsigned long> cycle;
        c.skip_blanks();
        while (c.peek() != ')') {
          if (!is_digit(c.peek())) {
            c.fail("point index or ')'");
          }
          Integer const p = read_integer(c);
          if (p > 1'000'000) {
            c.fail("point index below 1000000");
          }
          cycle.push_back(static_cast<unsigned long>(p));
          c.skip_blanks();
          if (c.peek() == ',') {
            c.get();
            c.skip_blanks();
          }
        }
        c.get();  // ')'
        if (!cycle.empty()) {
          v.cycles.push_back(std::move(cycle));
        }
        // cycles may be separated by blanks: "(0 1) (2 3)"
        Cursor probe = c;
        probe.skip_blanks();
        if (probe.peek() == '(') {
          c = probe;
        }
      }
      return v;
    }

    Value parse_value(Cursor& c) {
      c.skip_ws();
      std::size_t const line = c.line(), col = c.col();
      Value             v;
      char const        ch = c.peek();
      if (ch == '[') {
        v = parse_list(c);
      } else if (ch == '(') {
        v = parse_cycles(c);
      } else if (ch == '-' || ch == '+' || is_digit(ch)) {
        v.kind   = Value::Kind::integer;
        v.number = read_integer(c);
      } else if (is_letter(ch)) {
        v.kind = Value::Kind::name;
        v.name = read_name(c);
      } else {
        c.fail("a value (integer, name, list or permutation)");
      }
      v.line = line;
      v.col  = col;
      return v;
    }

    struct Field {
      std::string key;  // empty for a bare value
      Value       value;
      std::size_t line = 0;
      std::size_t col  = 0;
    };

    std::vector<Field> parse_fields(std::string const& text) {
      Cursor             c(text);
      std::vector<Field> out;
      while (true) {
        c.skip_ws();
        if (c.at_end()) {
          return out;
        }
        Field f;
        f.line = c.line();
        f.col  = c.col();
        if (is_letter(c.peek())) {
          std::string const name = read_name(c);
          Cursor            probe = c;
          probe.skip_ws();
          if (probe.peek() == '=') {
            c = probe;
            c.get();
            f.key   = name;
            f.value = parse_value(c);
          } else {
            f.value.kind = Value::Kind::name;
            f.value.name = name;
            f.value.line = f.line;
            f.value.col  = f.col;
          }
        } else {
          f.value = parse_value(c);
        }
        out.push_back(std::move(f));
        // fields must be separated by whitespace
        if (!c.at_end() && std::isspace(static_cast<unsigned char>(c.peek())) == 0
            && c.peek() != '#') {
          c.fail("whitespace between fields");
        }
      }
    }

    ////////////////////////////////////////////////////////////////////
    // Value interpretation
    ////////////////////////////////////////////////////////////////////

    Integer as_integer(Value const& v, std::string const& what) {
      if (v.kind != Value::Kind::integer) {
        v.fail(what);
      }
      return v.number;
    }

    long long as_small(Value const& v, std::string const& what, long long lo,
                       long long hi) {
      Integer const x = as_integer(v, what);
      if (x < lo || x > hi) {
        v.fail(what + " in [" + std::to_string(lo) + ", " + std::to_string(hi)
               + "]");
      }
      return static_cast<long long>(x);
    }

    IntVector as_int_list(Value const& v, std::string const& what) {
      if (v.kind != Value::Kind::list) {
        v.fail(what);
      }
      IntVector out;
      for (auto const& item : v.items) {
        out.push_back(as_integer(item, "integer entry of " + what));
      }
      return out;
    }

    IntMatrix as_matrix(Value const& v, std::string const& what) {
      if (v.kind != Value::Kind::list) {
        v.fail(what);
      }
      bool const nested = !v.items.empty()
                          && v.items.front().kind == Value::Kind::list;
      std::vector<IntVector> rows;
      if (!nested) {
        rows.push_back(as_int_list(v, what));
      } else {
        for (auto const& row : v.items) {
          rows.push_back(as_int_list(row, "row of " + what));
          if (rows.back().size() != rows.front().size()) {
            row.fail("row of length " + std::to_string(rows.front().size()));
          }
        }
      }
      return IntMatrix::from_rows(rows);
    }

    Permutation cycles_to_permutation(Value const& v, std::size_t degree) {
      Permutation p(degree);
      std::iota(p.begin(), p.end(), 0u);
      std::vector<bool> used(degree, false);
      for (auto const& cycle : v.cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          if (cycle[i] >= degree) {
            throw ValidationError("point " + std::to_string(cycle[i])
                                  + " outside 0.." + std::to_string(degree - 1));
          }
          if (used[cycle[i]]) {
            throw ValidationError("point " + std::to_string(cycle[i])
                                  + " repeated in " + cycle_notation(p));
          }
          used[cycle[i]]  = true;
          p[cycle[i]]     = static_cast<std::uint32_t>(cycle[(i + 1) % cycle.size()]);
        }
      }
      return p;
    }

    std::size_t cycles_extent(Value const& v) {
      std::size_t n = 0;
      for (auto const& cycle : v.cycles) {
        for (auto x : cycle) {
          n = std::max<std::size_t>(n, x + 1);
        }
      }
      return n;
    }

    template <typename F>
    auto validated(F&& f) {
      try {
        return f();
      } catch (InputError const&) {
        throw;
      } catch (Error const& e) {
        throw ValidationError(e.what());
      } catch (std::invalid_argument const& e) {
        throw ValidationError(e.what());
      }
    }

    class KeyTable {
     public:
      KeyTable(std::vector<Field> const& fields, std::size_t first,
               std::vector<std::string> allowed)
          : allowed_(std::move(allowed)) {
        for (std::size_t i = first; i < fields.size(); ++i) {
          Field const& f = fields[i];
          if (f.key.empty()) {
            throw ParseError(f.line, f.col, "key=value", f.value.describe());
          }
          if (std::find(allowed_.begin(), allowed_.end(), f.key)
              == allowed_.end()) {
            throw ParseError(f.line, f.col, "one of " + allowed_list(),
                             "key '" + f.key + "'");
          }
          for (Field const* seen : found_) {
            if (seen->key == f.key) {
              throw ParseError(f.line, f.col, "each key at most once",
                               "second '" + f.key + "'");
            }
          }
          found_.push_back(&f);
        }
      }

      Value const* get(std::string const& key) const {
        for (Field const* f : found_) {
          if (f->key == key) {
            return &f->value;
          }
        }
        return nullptr;
      }

      Value const& require(std::string const& key, std::size_t line,
                           std::size_t col) const {
        if (Value const* v = get(key)) {
          return *v;
        }
        throw ParseError(line, col, "key '" + key + "'", "none");
      }

     private:
      std::string allowed_list() const {
        std::string s;
        for (auto const& k : allowed_) {
          s += (s.empty() ? "" : ", ") + k;
        }
        return s;
      }

      std::vector<std::string>  allowed_;
      std::vector<Field const*> found_;
    };

    std::string join_labels(std::vector<std::string> const& labels) {
      std::string s;
      for (auto const& l : labels) {
        s += (s.empty() ? "" : ", ") + l;
      }
      return "generator label (one of " + s + ")";
    }

    // Re-throws a parse error from a sub-string with its column shifted.
    template <typename F>
    auto shifted(std::size_t offset, F&& f) {
      try {
        return f();
      } catch (UnknownGenerator const& e) {
        throw UnknownGenerator(e.line(), e.column() + offset, e.label(),
                               e.expected());
      } catch (MalformedExponent const& e) {
        throw MalformedExponent(e.line(), e.column() + offset, e.expected());
      } catch (ParseError const& e) {
        throw ParseError(e.line(), e.column() + offset, e.expected());
      }
    }

    std::string trim(std::string const& s, std::size_t* offset = nullptr) {
      std::size_t b = 0, e = s.size();
      while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) {
        ++b;
      }
      while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) {
        --e;
      }
      if (offset != nullptr) {
        *offset = b;
      }
      return s.substr(b, e - b);
    }

    bool is_identity_word(std::string const& name) {
      return name == "id" || name == "identity";
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Group specifications
  ////////////////////////////////////////////////////////////////////////

  std::string GroupSpec::to_string() const {
    std::string out = "group " + cli::to_string(kind);
    switch (kind) {
      case GroupKind::finite_perm: {
        out += " degree=" + std::to_string(degree) + " generators=[";
        for (std::size_t i = 0; i < generators.size(); ++i) {
          out += (i == 0 ? "" : ",") + cycle_notation(generators[i]);
        }
        out += "]";
        break;
      }
      case GroupKind::finite_table: {
        out += " order=" + std::to_string(order) + " table=[";
        for (std::size_t r = 0; r < order; ++r) {
          out += r == 0 ? "[" : ",[";
          for (std::size_t c = 0; c < order; ++c) {
            out += (c == 0 ? "" : ",") + std::to_string(table[r * order + c]);
          }
          out += "]";
        }
        out += "]";
        break;
      }
      case GroupKind::abelian:
        out += " invariants=" + bitwist::to_string(invariants)
               + " rank=" + std::to_string(rank);
        break;
      case GroupKind::bs:
        out += " n=" + std::to_string(n);
        break;
      case GroupKind::poly:
        out += " d=" + std::to_string(action.rows()) + " A=" + action.to_string();
        break;
    }
    return out;
  }

  GroupSpec parse_group_spec(std::string const& text) {
    std::vector<Field> const fields = parse_fields(text);
    std::size_t              i      = 0;
    if (i < fields.size() && fields[i].key.empty()
        && fields[i].value.kind == Value::Kind::name
        && fields[i].value.name == "group") {
      ++i;
    }
    std::string const kinds
        = "group kind (finite-perm, finite-table, abelian, bs or poly)";
    if (i >= fields.size()) {
      Cursor c(text);
      while (!c.at_end()) {
        c.get();
      }
      c.fail(kinds);
    }
    Field const& head = fields[i];
    if (!head.key.empty() || head.value.kind != Value::Kind::name) {
      throw ParseError(head.line, head.col, kinds,
                       head.key.empty() ? head.value.describe()
                                        : "key '" + head.key + "'");
    }
    GroupSpec spec;
    std::string const& kind = head.value.name;
    std::size_t const  line = head.line, col = head.col;
    ++i;

    if (kind == "finite-perm") {
      spec.kind = GroupKind::finite_perm;
      KeyTable const keys(fields, i, {"generators", "degree"});
      Value const&   gens = keys.require("generators", line, col);
      if (gens.kind != Value::Kind::list) {
        gens.fail("list of permutations");
      }
      std::size_t extent = 0;
      for (auto const& g : gens.items) {
        if (g.kind == Value::Kind::cycles) {
          extent = std::max(extent, cycles_extent(g));
        } else if (g.kind == Value::Kind::list) {
          extent = std::max(extent, g.items.size());
        } else {
          g.fail("permutation in cycle notation or image list");
        }
      }
      spec.degree = extent;
      if (Value const* d = keys.get("degree")) {
        auto const given = static_cast<std::size_t>(
            as_small(*d, "degree", 0, 1'000'000));
        if (given < extent) {
          throw ValidationError("degree " + std::to_string(given)
                                + " is smaller than the largest point "
                                + std::to_string(extent - 1));
        }
        spec.degree = given;
      }
      for (auto const& g : gens.items) {
        if (g.kind == Value::Kind::cycles) {
          spec.generators.push_back(cycles_to_permutation(g, spec.degree));
        } else {
          Permutation p;
          for (auto const& x : g.items) {
            p.push_back(static_cast<std::uint32_t>(
                as_small(x, "image point", 0, 1'000'000)));
          }
          for (std::size_t k = p.size(); k < spec.degree; ++k) {
            p.push_back(static_cast<std::uint32_t>(k));
          }
          spec.generators.push_back(std::move(p));
        }
      }
      validated([&] { return build_finite(spec).order(); });
    } else if (kind == "finite-table") {
      spec.kind = GroupKind::finite_table;
      KeyTable const keys(fields, i, {"table", "order"});
      IntMatrix const t = as_matrix(keys.require("table", line, col),
                                    "multiplication table [[..],..]");
      if (t.rows() != t.cols()) {
        throw ValidationError("multiplication table must be square, got "
                              + std::to_string(t.rows()) + "x"
                              + std::to_string(t.cols()));
      }
      spec.order = t.rows();
      if (Value const* o = keys.get("order")) {
        if (as_small(*o, "order", 1, 20000)
            != static_cast<long long>(spec.order)) {
          throw ValidationError("order does not match the table size "
                                + std::to_string(spec.order));
        }
      }
      for (std::size_t r = 0; r < spec.order; ++r) {
        for (std::size_t c = 0; c < spec.order; ++c) {
          if (t(r, c) < 0 || t(r, c) >= spec.order) {
            throw ValidationError("table entry " + t(r, c).str()
                                  + " out of range");
          }
          spec.table.push_back(static_cast<Element>(t(r, c)));
        }
      }
      validated([&] { return build_finite(spec).order(); });
    } else if (kind == "abelian") {
      spec.kind = GroupKind::abelian;
      KeyTable const keys(fields, i, {"invariants", "rank"});
      if (Value const* v = keys.get("invariants")) {
        spec.invariants = as_int_list(*v, "list of invariant factors");
      }
      if (Value const* r = keys.get("rank")) {
        spec.rank = static_cast<std::size_t>(as_small(*r, "free rank", 0, 64));
      }
      validated([&] { return build_abelian(spec).dimension(); });
    } else if (kind == "bs") {
      spec.kind = GroupKind::bs;
      KeyTable const keys(fields, i, {"n"});
      spec.n = as_small(keys.require("n", line, col), "base n", 2,
                        1'000'000'000);
    } else if (kind == "poly") {
      spec.kind = GroupKind::poly;
      KeyTable const keys(fields, i, {"A", "d"});
      spec.action = as_matrix(keys.require("A", line, col), "matrix A");
      if (Value const* d = keys.get("d")) {
        if (as_small(*d, "dimension d", 1, 16)
            != static_cast<long long>(spec.action.rows())) {
          throw ValidationError("d does not match the size of A");
        }
      }
      validated([&] { return build_poly(spec).dimension(); });
    } else {
      throw ParseError(line, col, kinds, "'" + kind + "'");
    }
    return spec;
  }

  FiniteGroup build_finite(GroupSpec const& spec) {
    return validated([&] {
      if (spec.kind == GroupKind::finite_perm) {
        return group_from_permutations(spec.generators);
      }
      if (spec.kind == GroupKind::finite_table) {
        return FiniteGroup::from_table(spec.order, spec.table);
      }
      if (spec.kind == GroupKind::abelian) {
        return realize(build_abelian(spec));
      }
      throw ValidationError("group " + to_string(spec.kind) + " is not finite");
    });
  }

  FgAbelianGroup build_abelian(GroupSpec const& spec) {
    if (spec.kind != GroupKind::abelian) {
      throw ValidationError("expected an abelian group, got "
                            + to_string(spec.kind));
    }
    return validated([&] { return FgAbelianGroup(spec.invariants, spec.rank); });
  }

  PolyGroup build_poly(GroupSpec const& spec) {
    if (spec.kind != GroupKind::poly) {
      throw ValidationError("expected a poly group, got " + to_string(spec.kind));
    }
    return validated([&] {
      if (spec.action.rows() == 0 || spec.action.rows() != spec.action.cols()) {
        throw ValidationError("A must be a nonempty square matrix");
      }
      return PolyGroup(spec.action);
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  std::string WordExpr::to_string() const {
    if (syllables.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& [label, exp] : syllables) {
      out += (out.empty() ? "" : " ") + label;
      if (exp != 1) {
        out += "^" + exp.str();
      }
    }
    return out;
  }

  WordExpr parse_word(std::string const&              text,
                      std::vector<std::string> const& generators) {
    Cursor   c(text);
    WordExpr w;
    c.skip_blanks();
    if (c.peek() == '1') {
      c.get();
      c.skip_blanks();
      if (!c.at_end()) {
        c.fail("end of input after the empty word '1'");
      }
      return w;
    }
    if (c.at_end()) {
      c.fail(join_labels(generators));
    }
    while (!c.at_end()) {
      std::size_t const line = c.line(), col = c.col();
      if (!is_letter(c.peek())) {
        c.fail(join_labels(generators));
      }
      std::string label;
      while (is_letter(c.peek())) {
        label += c.get();
      }
      if (std::find(generators.begin(), generators.end(), label)
          == generators.end()) {
        throw UnknownGenerator(line, col, label, join_labels(generators));
      }
      Integer exp = 1;
      if (c.peek() == '^') {
        c.get();
        std::string digits;
        if (c.peek() == '-') {
          digits += c.get();
        }
        if (!is_digit(c.peek())) {
          throw MalformedExponent(c.line(), c.col(), "digits after '^'",
                                  c.found());
        }
        while (is_digit(c.peek())) {
          digits += c.get();
        }
        exp = Integer(digits);
        if (!c.at_end() && std::isspace(static_cast<unsigned char>(c.peek())) == 0) {
          throw MalformedExponent(c.line(), c.col(),
                                  "whitespace or end after the exponent",
                                  c.found());
        }
      } else if (!c.at_end()
                 && std::isspace(static_cast<unsigned char>(c.peek())) == 0) {
        c.fail("'^', whitespace or end of input");
      }
      if (!w.syllables.empty() && w.syllables.back().first == label) {
        w.syllables.back().second += exp;
        if (w.syllables.back().second == 0) {
          w.syllables.pop_back();
        }
      } else if (exp != 0) {
        w.syllables.emplace_back(label, exp);
      }
      c.skip_blanks();
    }
    return w;
  }

  BSWord to_bs_word(WordExpr const& w) {
    BSWord out;
    for (auto const& [label, exp] : w.syllables) {
      if (label != "a" && label != "b") {
        throw ValidationError("B(1,n) words use only a and b, got " + label);
      }
      out.syllables.emplace_back(label[0], exp);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Maps and elements
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Element element_ref(Value const& v, FiniteGroup const& g,
                        std::size_t degree) {
      if (v.kind == Value::Kind::integer) {
        return static_cast<Element>(
            as_small(v, "element index", 0,
                     static_cast<long long>(g.order()) - 1));
      }
      if (v.kind == Value::Kind::cycles && degree > 0) {
        std::string const name = cycle_notation(cycles_to_permutation(v, degree));
        for (Element x = 0; x < g.order(); ++x) {
          if (g.element_name(x) == name) {
            return x;
          }
        }
        throw ValidationError("permutation " + name + " is not in the group");
      }
      v.fail("element index" + std::string(degree > 0 ? " or permutation" : ""));
    }

    std::size_t permutation_degree(FiniteGroup const& g) {
      // names of permutation-group elements are cycle notation; the degree
      // is the largest point mentioned plus one
      std::size_t degree = 0;
      for (Element x = 0; x < g.order(); ++x) {
        std::string const name = g.element_name(x);
        if (name.empty() || name.front() != '(') {
          return 0;
        }
        std::string digits;
        for (char ch : name + " ") {
          if (is_digit(ch)) {
            digits += ch;
          } else if (!digits.empty()) {
            degree = std::max<std::size_t>(degree, std::stoul(digits) + 1);
            digits.clear();
          }
        }
      }
      return degree;
    }
  }  // namespace

  GroupMap parse_finite_map(std::string const& text, FiniteGroup const& g) {
    std::vector<Field> const fields = parse_fields(text);
    if (fields.size() != 1) {
      throw ParseError(1, 1, "exactly one of id, trivial, images=, gens=, inner=",
                       std::to_string(fields.size()) + " fields");
    }
    Field const&      f      = fields[0];
    std::size_t const degree = permutation_degree(g);
    return validated([&] {
      if (f.key.empty()) {
        if (f.value.kind == Value::Kind::name && is_identity_word(f.value.name)) {
          return GroupMap::identity(g);
        }
        if (f.value.kind == Value::Kind::name && f.value.name == "trivial") {
          return GroupMap::trivial(g, g);
        }
        f.value.fail("id, trivial or key=value");
      }
      if (f.key == "inner") {
        return inner_automorphism(g, element_ref(f.value, g, degree));
      }
      if (f.key == "images" || f.key == "gens") {
        if (f.value.kind != Value::Kind::list) {
          f.value.fail("list of elements");
        }
        std::vector<Element> images;
        for (auto const& item : f.value.items) {
          images.push_back(element_ref(item, g, degree));
        }
        if (f.key == "gens") {
          if (images.size() != g.generators().size()) {
            throw ValidationError("expected " + std::to_string(g.generators().size())
                                  + " generator images, got "
                                  + std::to_string(images.size()));
          }
          return extend_from_generators(g, g, images);
        }
        return validate_homomorphism(g, g, GroupMap(g.order(), images));
      }
      throw ParseError(f.line, f.col, "one of images, gens, inner",
                       "key '" + f.key + "'");
    });
  }

  AbelianHom parse_abelian_map(std::string const& text, FgAbelianGroup const& g) {
    std::vector<Field> const fields = parse_fields(text);
    if (fields.size() != 1 || !fields[0].key.empty()) {
      throw ParseError(1, 1, "id, trivial, an integer or a matrix",
                       std::to_string(fields.size()) + " fields");
    }
    Value const&      v = fields[0].value;
    std::size_t const k = g.dimension();
    return validated([&] {
      if (v.kind == Value::Kind::name && is_identity_word(v.name)) {
        return AbelianHom::identity(g);
      }
      if (v.kind == Value::Kind::name && v.name == "trivial") {
        return AbelianHom::scalar(g, 0);
      }
      if (v.kind == Value::Kind::integer) {
        return AbelianHom::scalar(g, v.number);
      }
      IntMatrix m = as_matrix(v, "matrix");
      if (m.rows() == 1 && m.cols() == k * k && k > 1) {
        IntMatrix square(k, k);
        for (std::size_t i = 0; i < k * k; ++i) {
          square(i / k, i % k) = m(0, i);
        }
        m = square;
      }
      if (m.rows() != k || m.cols() != k) {
        throw ValidationError("endomorphism of " + g.to_string() + " needs a "
                              + std::to_string(k) + "x" + std::to_string(k)
                              + " matrix");
      }
      return AbelianHom(g, m);
    });
  }

  BSEndo parse_bs_map(std::string const& text, long long n) {
    std::size_t       offset = 0;
    std::string const body   = trim(text, &offset);
    if (is_identity_word(body)) {
      return BSEndo{n, BSElement::a(n), BSElement::b(n)};
    }
    std::optional<BSElement> image_a, image_b;
    std::size_t              start = 0;
    while (start <= text.size()) {
      std::size_t const end  = std::min(text.find(';', start), text.size());
      std::size_t       lead = 0;
      std::string const part = trim(text.substr(start, end - start), &lead);
      std::size_t const col  = start + lead + 1;
      if (!part.empty()) {
        std::size_t const eq = part.find('=');
        std::string const key = eq == std::string::npos ? "" : trim(part.substr(0, eq));
        if (key != "a" && key != "b") {
          throw ParseError(1, col, "'a=<word>' or 'b=<word>'", "'" + part + "'");
        }
        auto& slot = key == "a" ? image_a : image_b;
        if (slot) {
          throw ParseError(1, col, "each of a, b at most once", "second '" + key + "'");
        }
        std::string const word = part.substr(eq + 1);
        WordExpr const    w    = shifted(col + eq, [&] {
          return parse_word(word, {"a", "b"});
        });
        slot = embed_word(to_bs_word(w), n);
      }
      start = end + 1;
    }
    if (!image_a || !image_b) {
      throw ParseError(1, text.size() + 1, image_a ? "'b=<word>'" : "'a=<word>'",
                       "end of input");
    }
    return validated([&] { return validate_bs_endo(n, *image_a, *image_b); });
  }

  PolyAuto parse_poly_map(std::string const& text, PolyGroup const& g) {
    std::vector<Field> const fields = parse_fields(text);
    if (fields.size() == 1 && fields[0].key.empty()
        && fields[0].value.kind == Value::Kind::name
        && is_identity_word(fields[0].value.name)) {
      return PolyAuto::identity(g);
    }
    KeyTable const keys(fields, 0, {"M", "eps", "u"});
    IntMatrix const M   = as_matrix(keys.require("M", 1, 1), "matrix M");
    int             eps = 1;
    if (Value const* e = keys.get("eps")) {
      eps = static_cast<int>(as_small(*e, "eps (+1 or -1)", -1, 1));
    }
    IntVector u(g.dimension());
    if (Value const* v = keys.get("u")) {
      u = as_int_list(*v, "translation vector u");
    }
    return validated([&] { return validate_poly_auto(g, M, eps, u); });
  }

  PolyElement parse_poly_element(std::string const& text, PolyGroup const& g) {
    std::size_t const d = g.dimension();
    Cursor            c(text);
    c.skip_blanks();
    if (c.peek() == '(') {
      c.get();
      c.skip_blanks();
      if (c.peek() != '(') {
        c.fail("'(' opening the fiber vector");
      }
      c.get();
      PolyElement p{{}, 0};
      while (true) {
        c.skip_blanks();
        p.v.push_back(read_integer(c));
        c.skip_blanks();
        if (c.peek() == ',') {
          c.get();
          continue;
        }
        if (c.peek() == ')') {
          c.get();
          break;
        }
        c.fail("',' or ')'");
      }
      c.skip_blanks();
      if (c.peek() != ',') {
        c.fail("','");
      }
      c.get();
      c.skip_blanks();
      Integer const t = read_integer(c);
      c.skip_blanks();
      if (c.peek() != ')') {
        c.fail("')'");
      }
      c.get();
      c.skip_blanks();
      if (!c.at_end()) {
        c.fail("end of input");
      }
      if (p.v.size() != d) {
        throw ValidationError("element needs a fiber vector of length "
                              + std::to_string(d));
      }
      if (t > 1'000'000 || t < -1'000'000) {
        throw ValidationError("t-coordinate out of range");
      }
      p.t = static_cast<long long>(t);
      return p;
    }
    static char const* const fiber_labels[] = {"x", "y", "z", "w"};
    if (d > 4) {
      throw ValidationError("words need d <= 4; use the ((v),t) form");
    }
    std::vector<std::string> labels(fiber_labels, fiber_labels + d);
    labels.emplace_back("t");
    WordExpr const w      = parse_word(text, labels);
    PolyElement    result = PolyElement::identity(d);
    for (auto const& [label, exp] : w.syllables) {
      if (exp > 1'000'000 || exp < -1'000'000) {
        throw ValidationError("exponent out of range: " + exp.str());
      }
      PolyElement gen = PolyElement::identity(d);
      if (label == "t") {
        gen.t = 1;
      } else {
        auto const i = static_cast<std::size_t>(
            std::find(labels.begin(), labels.end(), label) - labels.begin());
        gen.v[i] = 1;
      }
      result = poly_multiply(g, result,
                             poly_power(g, gen, static_cast<long long>(exp)));
    }
    return result;
  }

  IntMatrix parse_matrix(std::string const& text) {
    std::vector<Field> const fields = parse_fields(text);
    if (fields.size() != 1 || !fields[0].key.empty()) {
      throw ParseError(1, 1, "a matrix [[..],[..]]",
                       std::to_string(fields.size()) + " fields");
    }
    return as_matrix(fields[0].value, "a matrix [[..],[..]]");
  }

}  // namespace bitwist::cli
