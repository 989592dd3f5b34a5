#pragma once

// Finitary partial bijections of N = {1, 2, ...}: the elements of the
// symmetric inverse semigroup R_infinity (the rook monoid).
//
// An element is an image list over a finite bound; every x > bound is an
// implicit fixed point. In the 0-1 matrix picture r_{lk} = 1 iff r(k) = l,
// so the matrix product r1 * r2 is the map x -> r1(r2(x)). For example
// compose(e{1}, (1 2)) sends 1 -> 2 -> 2 and kills 2 (2 -> 1 is undefined
// in e{1}), giving [2,_].

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace rookchar {

  using point_type = std::uint32_t;

  inline constexpr point_type undefined_point = 0;

  class PartialBijection {
   public:
    // The identity.
    PartialBijection() = default;

    // images[x - 1] is r(x), or undefined_point. Throws ParseError on an
    // injectivity violation or an image outside {1, ..., images.size()}.
    static PartialBijection from_images(std::vector<point_type> images) {
      std::vector<bool> used(images.size() + 1, false);
      for (std::size_t i = 0; i < images.size(); ++i) {
        point_type y = images[i];
        if (y == undefined_point) {
          continue;
        }
        if (y > images.size()) {
          throw ParseError("point " + std::to_string(y)
                           + " out of range for bound "
                           + std::to_string(images.size()));
        }
        if (used[y]) {
          throw ParseError("two points map to " + std::to_string(y));
        }
        used[y] = true;
      }
      PartialBijection r;
      r.images_ = std::move(images);
      r.canonicalize();
      return r;
    }

    static PartialBijection identity() {
      return PartialBijection();
    }

    // e_A: the idempotent with domain N \ A.
    static PartialBijection idempotent(std::vector<point_type> const& killed) {
      point_type bound = 0;
      for (auto p : killed) {
        check_point(p);
        bound = std::max(bound, p);
      }
      std::vector<point_type> images(bound);
      for (point_type x = 1; x <= bound; ++x) {
        images[x - 1] = x;
      }
      for (auto p : killed) {
        images[p - 1] = undefined_point;
      }
      return from_images(std::move(images));
    }

    // (p1 p2 ... pm): p1 -> p2 -> ... -> pm -> p1.
    static PartialBijection cycle(std::vector<point_type> const& points) {
      point_type bound = 0;
      for (auto p : points) {
        check_point(p);
        bound = std::max(bound, p);
      }
      std::vector<point_type> images(bound);
      for (point_type x = 1; x <= bound; ++x) {
        images[x - 1] = x;
      }
      std::vector<bool> seen(bound + 1, false);
      for (std::size_t i = 0; i < points.size(); ++i) {
        if (seen[points[i]]) {
          throw ParseError("point " + std::to_string(points[i])
                           + " repeated in a cycle");
        }
        seen[points[i]]          = true;
        images[points[i] - 1] = points[(i + 1) % points.size()];
      }
      return from_images(std::move(images));
    }

    static PartialBijection transposition(point_type a, point_type b) {
      return a == b ? identity() : cycle({a, b});
    }

    std::size_t bound() const noexcept {
      return images_.size();
    }

    std::vector<point_type> const& images() const noexcept {
      return images_;
    }

    bool is_defined_at(point_type x) const noexcept {
      return x > images_.size() || images_[x - 1] != undefined_point;
    }

    // r(x), or undefined_point when x is not in the domain.
    point_type operator()(point_type x) const noexcept {
      return x > images_.size() ? x : images_[x - 1];
    }

    bool is_permutation() const noexcept {
      return std::none_of(images_.cbegin(), images_.cend(), [](point_type y) {
        return y == undefined_point;
      });
    }

    bool is_identity() const noexcept {
      return images_.empty();
    }

    // Points of {1..bound} outside the domain.
    std::vector<point_type> domain_complement() const {
      std::vector<point_type> out;
      for (point_type x = 1; x <= images_.size(); ++x) {
        if (images_[x - 1] == undefined_point) {
          out.push_back(x);
        }
      }
      return out;
    }

    // Points of {1..bound} outside the range.
    std::vector<point_type> range_complement() const {
      std::vector<bool> hit(images_.size() + 1, false);
      for (auto y : images_) {
        if (y != undefined_point) {
          hit[y] = true;
        }
      }
      std::vector<point_type> out;
      for (point_type x = 1; x <= images_.size(); ++x) {
        if (!hit[x]) {
          out.push_back(x);
        }
      }
      return out;
    }

    auto operator<=>(PartialBijection const&) const = default;
    bool operator==(PartialBijection const&) const  = default;

   private:
    static void check_point(point_type p) {
      if (p == 0) {
        throw ParseError("points are 1-based; got 0");
      }
    }

    void canonicalize() {
      while (!images_.empty() && images_.back() == images_.size()) {
        images_.pop_back();
      }
    }

    std::vector<point_type> images_;
  };

  // x -> r1(r2(x)).
  inline PartialBijection compose(PartialBijection const& r1,
                                  PartialBijection const& r2) {
    std::size_t const       bound = std::max(r1.bound(), r2.bound());
    std::vector<point_type> images(bound);
    for (point_type x = 1; x <= bound; ++x) {
      point_type y  = r2(x);
      images[x - 1] = y == undefined_point ? undefined_point : r1(y);
    }
    return PartialBijection::from_images(std::move(images));
  }

  inline PartialBijection operator*(PartialBijection const& r1,
                                    PartialBijection const& r2) {
    return compose(r1, r2);
  }

  // The inverse partial bijection (matrix transpose).
  inline PartialBijection star(PartialBijection const& r) {
    std::vector<point_type> images(r.bound(), undefined_point);
    for (point_type x = 1; x <= r.bound(); ++x) {
      if (point_type y = r(x); y != undefined_point) {
        images[y - 1] = x;
      }
    }
    return PartialBijection::from_images(std::move(images));
  }

  // {x in D(r) : r(x) != x} together with the points outside D(r).
  inline std::vector<point_type> support(PartialBijection const& r) {
    std::vector<point_type> out;
    for (point_type x = 1; x <= r.bound(); ++x) {
      if (r(x) != x) {
        out.push_back(x);
      }
    }
    return out;
  }

  inline bool supports_disjoint(PartialBijection const& a,
                                PartialBijection const& b) {
    auto sa = support(a);
    auto sb = support(b);
    std::vector<point_type> both;
    std::set_intersection(
        sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(both));
    return both.empty();
  }

  // Canonical image-list form, e.g. "[2,3,_,4,_]"; the identity is "[]".
  inline std::string render(PartialBijection const& r) {
    std::string out = "[";
    for (point_type x = 1; x <= r.bound(); ++x) {
      if (x > 1) {
        out += ',';
      }
      point_type y = r(x);
      out += y == undefined_point ? std::string("_") : std::to_string(y);
    }
    out += ']';
    return out;
  }

  namespace detail {
    class ElementParser {
     public:
      explicit ElementParser(std::string_view text) : text_(text) {}

      PartialBijection parse() {
        skip_ws();
        if (at_end()) {
          fail("empty element literal");
        }
        if (peek() == '[') {
          auto r = parse_image_list();
          skip_ws();
          if (!at_end()) {
            fail("trailing characters after image list");
          }
          return r;
        }
        PartialBijection r;
        while (true) {
          skip_ws();
          if (at_end()) {
            break;
          }
          r = compose(r, parse_factor());
        }
        return r;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError("syntax error at offset " + std::to_string(pos_)
                         + " in \"" + std::string(text_) + "\": " + what);
      }

      bool at_end() const {
        return pos_ >= text_.size();
      }

      char peek() const {
        return text_[pos_];
      }

      void skip_ws() {
        while (!at_end() && (peek() == ' ' || peek() == '\t')) {
          ++pos_;
        }
      }

      void expect(char c) {
        skip_ws();
        if (at_end() || peek() != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++pos_;
      }

      point_type parse_point() {
        skip_ws();
        std::size_t start = pos_;
        std::uint64_t value = 0;
        while (!at_end() && peek() >= '0' && peek() <= '9') {
          value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
          if (value > 1'000'000) {
            fail("point too large");
          }
          ++pos_;
        }
        if (pos_ == start) {
          fail("expected a point");
        }
        if (value == 0) {
          fail("points are 1-based");
        }
        return static_cast<point_type>(value);
      }

      PartialBijection parse_image_list() {
        expect('[');
        std::vector<point_type> images;
        skip_ws();
        if (!at_end() && peek() == ']') {
          ++pos_;
          return PartialBijection::identity();
        }
        while (true) {
          skip_ws();
          if (!at_end() && peek() == '_') {
            ++pos_;
            images.push_back(undefined_point);
          } else {
            images.push_back(parse_point());
          }
          skip_ws();
          if (at_end()) {
            fail("unterminated image list");
          }
          if (peek() == ',') {
            ++pos_;
            continue;
          }
          if (peek() == ']') {
            ++pos_;
            break;
          }
          fail("expected ',' or ']'");
        }
        return PartialBijection::from_images(std::move(images));
      }

      PartialBijection parse_factor() {
        if (peek() == '(') {
          ++pos_;
          std::vector<point_type> points;
          while (true) {
            skip_ws();
            if (at_end()) {
              fail("unterminated cycle");
            }
            if (peek() == ')') {
              ++pos_;
              break;
            }
            points.push_back(parse_point());
          }
          if (points.empty()) {
            fail("empty cycle");
          }
          return PartialBijection::cycle(points);
        }
        if (peek() == 'e') {
          ++pos_;
          if (at_end() || peek() != '{') {
            return PartialBijection::identity();
          }
          ++pos_;
          std::vector<point_type> killed;
          while (true) {
            killed.push_back(parse_point());
            skip_ws();
            if (at_end()) {
              fail("unterminated idempotent");
            }
            if (peek() == ',') {
              ++pos_;
              continue;
            }
            if (peek() == '}') {
              ++pos_;
              break;
            }
            fail("expected ',' or '}'");
          }
          return PartialBijection::idempotent(killed);
        }
        fail(std::string("unexpected character '") + peek() + "'");
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
    };
  }  // namespace detail

  // Image list "[2,3,_,4,_]" or product form "(1 2 3)e{3}e{5}", where
  // juxtaposition is the semigroup product (left factor applied last).
  inline PartialBijection parse_element(std::string_view text) {
    return detail::ElementParser(text).parse();
  }

}  // namespace rookchar

template <>
struct std::hash<rookchar::PartialBijection> {
  std::size_t operator()(rookchar::PartialBijection const& r) const noexcept {
    std::size_t h = r.bound();
    for (auto y : r.images()) {
      h ^= std::hash<std::uint32_t>{}(y) + 0x9e3779b97f4a7c15ULL + (h << 6)
           + (h >> 2);
    }
    return h;
  }
};
