#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "groupgraphs/numtheory.hpp"
#include "groupgraphs/perm.hpp"

namespace gg {

struct ParseError : std::runtime_error {
  size_t offset;
  ParseError(const std::string& msg, size_t off)
      : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// Symbolic description of a finite group.
struct GroupSpec {
  enum class Kind {
    Cyclic,             // Z n
    Dihedral,           // D m, m = group order, even
    Quaternion8,        // Q8
    Symmetric,          // S n
    Alternating,        // A n
    ElementaryAbelian,  // E(p, k)
    DirectProduct,
    Catalog,            // SG(order, index)
    PermGenerators,     // perm:[...]
  };

  Kind kind = Kind::Cyclic;
  i64 n = 1;                        // Cyclic/Dihedral(order)/Symmetric/Alternating
  i64 p = 0, k = 0;                 // ElementaryAbelian
  i64 order = 0, index = 0;         // Catalog
  std::vector<GroupSpec> factors;   // DirectProduct
  std::vector<Perm> generators;     // PermGenerators

  static GroupSpec cyclic(i64 n) {
    if (n < 1) throw std::invalid_argument("cyclic: n must be >= 1");
    GroupSpec s; s.kind = Kind::Cyclic; s.n = n; return s;
  }
  static GroupSpec dihedral(i64 order) {
    if (order < 2 || order % 2 != 0)
      throw std::invalid_argument("dihedral: order must be even and >= 2");
    GroupSpec s; s.kind = Kind::Dihedral; s.n = order; return s;
  }
  static GroupSpec quaternion8() { GroupSpec s; s.kind = Kind::Quaternion8; return s; }
  static GroupSpec symmetric(i64 n) {
    if (n < 1) throw std::invalid_argument("symmetric: n must be >= 1");
    GroupSpec s; s.kind = Kind::Symmetric; s.n = n; return s;
  }
  static GroupSpec alternating(i64 n) {
    if (n < 1) throw std::invalid_argument("alternating: n must be >= 1");
    GroupSpec s; s.kind = Kind::Alternating; s.n = n; return s;
  }
  static GroupSpec elementary_abelian(i64 p, i64 k) {
    if (!is_prime(p)) throw std::invalid_argument("elementary abelian: p must be prime");
    if (k < 1) throw std::invalid_argument("elementary abelian: k must be >= 1");
    GroupSpec s; s.kind = Kind::ElementaryAbelian; s.p = p; s.k = k; return s;
  }
  static GroupSpec direct_product(std::vector<GroupSpec> fs) {
    if (fs.empty()) throw std::invalid_argument("direct product: needs at least one factor");
    GroupSpec s; s.kind = Kind::DirectProduct; s.factors = std::move(fs); return s;
  }
  static GroupSpec catalog(i64 order, i64 index) {
    GroupSpec s; s.kind = Kind::Catalog; s.order = order; s.index = index; return s;
  }
  static GroupSpec perm_generators(std::vector<Perm> gens) {
    GroupSpec s; s.kind = Kind::PermGenerators; s.generators = std::move(gens); return s;
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Cyclic: return "Z" + std::to_string(n);
      case Kind::Dihedral: return "D" + std::to_string(n);
      case Kind::Quaternion8: return "Q8";
      case Kind::Symmetric: return "S" + std::to_string(n);
      case Kind::Alternating: return "A" + std::to_string(n);
      case Kind::ElementaryAbelian:
        return "E(" + std::to_string(p) + "," + std::to_string(k) + ")";
      case Kind::Catalog:
        return "SG(" + std::to_string(order) + "," + std::to_string(index) + ")";
      case Kind::DirectProduct: {
        std::string s;
        for (size_t i = 0; i < factors.size(); ++i) {
          if (i) s += "x";
          s += factors[i].to_string();
        }
        return s;
      }
      case Kind::PermGenerators: {
        std::string s = "perm:[";
        for (size_t i = 0; i < generators.size(); ++i) {
          if (i) s += ",";
          s += format_cycles(generators[i]);
        }
        return s + "]";
      }
    }
    return "?";
  }
};

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : text_(text) {}

  GroupSpec parse() {
    skip_ws();
    if (text_.compare(pos_, 5, "perm:") == 0) {
      pos_ += 5;
      GroupSpec s = parse_perm_list();
      expect_end();
      return s;
    }
    std::vector<GroupSpec> atoms;
    atoms.push_back(parse_atom());
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == 'x') {
      ++pos_;
      atoms.push_back(parse_atom());
      skip_ws();
    }
    expect_end();
    if (atoms.size() == 1) return atoms[0];
    return GroupSpec::direct_product(std::move(atoms));
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() { while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_; }

  void expect_end() {
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
  }

  char expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    return text_[pos_++];
  }

  i64 parse_int() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (pos_ == start) fail("expected integer");
    return std::stoll(text_.substr(start, pos_ - start));
  }

  GroupSpec parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected group atom");
    if (text_.compare(pos_, 2, "SG") == 0) {
      pos_ += 2;
      expect('(');
      i64 order = parse_int();
      skip_ws();
      expect(',');
      i64 index = parse_int();
      skip_ws();
      expect(')');
      return GroupSpec::catalog(order, index);
    }
    char c = text_[pos_];
    switch (c) {
      case 'Z': { ++pos_; i64 n = parse_int(); return make(GroupSpec::cyclic(n)); }
      case 'Q': {
        ++pos_;
        i64 n = parse_int();
        if (n != 8) fail("only Q8 is a named atom (use SG(16,8) for Q16)");
        return GroupSpec::quaternion8();
      }
      case 'D': {
        ++pos_;
        i64 m = parse_int();
        if (m % 2 != 0 || m < 2) fail("dihedral parameter must be even: D stands for the group order");
        return GroupSpec::dihedral(m);
      }
      case 'S': { ++pos_; i64 n = parse_int(); return make(GroupSpec::symmetric(n)); }
      case 'A': { ++pos_; i64 n = parse_int(); return make(GroupSpec::alternating(n)); }
      case 'E': {
        ++pos_;
        expect('(');
        i64 p = parse_int();
        skip_ws();
        expect(',');
        i64 k = parse_int();
        skip_ws();
        expect(')');
        return make(GroupSpec::elementary_abelian(p, k));
      }
      default: fail("unknown family name");
    }
  }

  // Convert invalid_argument from the builders into a positioned ParseError.
  template <typename F>
  GroupSpec make(F&& spec) { return spec; }

  GroupSpec parse_perm_list() {
    skip_ws();
    expect('[');
    std::vector<Perm> gens;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ']') {
      ++pos_;
    } else {
      while (true) {
        size_t start = pos_;
        int depth = 0;
        while (pos_ < text_.size()) {
          char c = text_[pos_];
          if (c == '(') ++depth;
          else if (c == ')') --depth;
          else if ((c == ',' || c == ']') && depth == 0) break;
          ++pos_;
        }
        if (pos_ >= text_.size()) fail("unterminated permutation list");
        try {
          gens.push_back(gg::parse_cycles(text_.substr(start, pos_ - start)));
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), start);
        }
        if (text_[pos_] == ']') { ++pos_; break; }
        ++pos_;  // ','
      }
    }
    // pad all generators to a common degree
    int deg = 1;
    for (auto& g : gens) deg = std::max(deg, static_cast<int>(g.size()));
    for (auto& g : gens) g = perm_pad(std::move(g), deg);
    return GroupSpec::perm_generators(std::move(gens));
  }
};

}  // namespace detail

// Parses the group-spec DSL: Z6, D12, Q8, S5, A7, E(2,3), Z2xZ4, SG(16,3),
// perm:[(1 2),(1 2 3)]. Throws ParseError with a byte offset on bad input.
inline GroupSpec parse_group_spec(const std::string& text) {
  try {
    return detail::SpecParser(text).parse();
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace gg
