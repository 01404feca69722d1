#include "grings/expr.hpp"

#include <cctype>

#include "grings/errors.hpp"
#include "grings/rings.hpp"

namespace grings {

namespace {

class RingParser {
 public:
  RingParser(std::string_view s, Elem cap) : s_(s), cap_(cap) {}

  RingPtr parse_all() {
    RingPtr r = ring();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  std::uint64_t number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    std::string digits(s_.substr(start, pos_ - start));
    if (digits.size() > 18) {
      pos_ = start;
      fail("number too large");
    }
    return std::stoull(digits);
  }

  RingPtr ring() {
    std::vector<RingPtr> parts{term()};
    while (accept("(+)")) parts.push_back(term());
    if (parts.size() == 1) return parts.front();
    try {
      return direct_sum(parts, cap_);
    } catch (const CapExceeded&) {
      throw;
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }

  RingPtr term() {
    RingPtr r = atom();
    while (true) {
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != '[') break;
      ++pos_;
      std::size_t start = pos_;
      std::size_t close = s_.find(']', pos_);
      if (close == std::string_view::npos) fail("missing ']'");
      GroupPtr g;
      try {
        g = parse_group(s_.substr(start, close - start));
      } catch (const ParseError& e) {
        throw ParseError(start + e.position(), e.detail());
      }
      pos_ = close + 1;
      try {
        r = make_group_ring(r, g);
      } catch (const CapExceeded&) {
        throw;
      } catch (const std::exception& e) {
        fail(e.what());
      }
    }
    return r;
  }

  RingPtr atom() {
    skip_ws();
    const std::size_t start = pos_;
    try {
      if (accept("Z/")) return make_zmod(number());
      if (accept("GF(")) {
        std::uint64_t p = number();
        unsigned k = 1;
        if (accept("^")) {
          k = static_cast<unsigned>(number());
        } else if (!is_prime(p)) {
          // GF(q) with q a prime power.
          auto f = factorize(p);
          if (f.size() != 1) fail("GF(q) needs a prime power q");
          p = f[0].first;
          k = f[0].second;
        }
        expect(")");
        return make_gf(p, k);
      }
      if (accept("M")) {
        std::uint64_t n = number();
        expect("(");
        RingPtr base = ring();
        expect(")");
        return make_matrix_ring(base, static_cast<unsigned>(n), cap_);
      }
      if (accept("(")) {
        RingPtr r = ring();
        expect(")");
        return r;
      }
    } catch (const ParseError&) {
      throw;
    } catch (const CapExceeded&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(start, e.what());
    }
    fail("expected a ring (Z/n, GF(q), M<n>(...), or parentheses)");
  }

  std::string_view s_;
  Elem cap_;
  std::size_t pos_ = 0;
};

}  // namespace

RingPtr parse_ring(std::string_view expr, Elem cap) { return RingParser(expr, cap).parse_all(); }

std::shared_ptr<const GroupRing> parse_group_ring(std::string_view ring_expr,
                                                  std::string_view group_expr) {
  RingPtr base = parse_ring(ring_expr);
  GroupPtr g = parse_group(group_expr);
  return make_group_ring(base, g);
}

}  // namespace grings
