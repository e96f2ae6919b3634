#pragma once

#include <random>
#include <vector>

#include "galilei/enveloping.hpp"
#include "galilei/lie_algebra.hpp"

namespace galilei::testing {

/// p/q with |p| <= max_num, 1 <= q <= max_den.
inline Rational random_rational(std::mt19937_64& rng, long max_num = 12, long max_den = 7) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  const long p = num(rng);
  return Rational(p, den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng) {
  for (;;) {
    Rational r = random_rational(rng);
    if (!r.is_zero()) return r;
  }
}

struct ParamShape {
  enum Rule { any, zero, nonzero };
  Rule k = any, m = any, l = any;
};

inline Rational draw(std::mt19937_64& rng, ParamShape::Rule rule) {
  switch (rule) {
    case ParamShape::zero:
      return Rational(0);
    case ParamShape::nonzero:
      return random_nonzero_rational(rng);
    default:
      return random_rational(rng);
  }
}

inline ExtensionParams random_params(std::mt19937_64& rng, ParamShape shape = {}) {
  ExtensionParams p;
  p.k = draw(rng, shape.k);
  p.m = draw(rng, shape.m);
  p.l = draw(rng, shape.l);
  return p;
}

inline NOPoly random_nopoly(std::mt19937_64& rng, unsigned max_degree, std::size_t terms) {
  const auto monomials = monomials_up_to(max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
  NOPoly p;
  for (std::size_t i = 0; i < terms; ++i) p.add_term(monomials[pick(rng)], random_rational(rng, 5, 3));
  return p;
}

/// Independent product in the enveloping algebra, used only as a test
/// oracle. Builds the right factor one generator at a time:
///   a * x = a                         if every factor of a is <= x,
///   a * x = (u x) w + u [w, x]        where a = u w, u <= x < w,
/// with [w, x] expanded by the Leibniz rule over the factors of w. No
/// adjacent-pair rewriting is involved.
class OracleProduct {
 public:
  explicit OracleProduct(const EnvelopingAlgebra& env) : env_(env) {}

  NOPoly times_generator(const Monomial& a, std::size_t x) const {
    Monomial u, w;
    bool has_w = false;
    for (std::size_t s = 0; s < slot::count; ++s) {
      if (s <= x) {
        u.exponents[s] = a.exponents[s];
      } else {
        w.exponents[s] = a.exponents[s];
        has_w = has_w || a.exponents[s] > 0;
      }
    }
    Monomial ux = u;
    ++ux.exponents[x];
    if (!has_w) return NOPoly::monomial(ux);

    NOPoly out;
    Monomial uxw = ux;
    for (std::size_t s = x + 1; s < slot::count; ++s) uxw.exponents[s] = w.exponents[s];
    out.add_term(uxw, 1);

    // [w, x] = sum_i y_1 .. [y_i, x] .. y_n over the word of w.
    std::vector<std::size_t> word;
    for (std::size_t s = 0; s < slot::count; ++s) word.insert(word.end(), w.exponents[s], s);
    for (std::size_t i = 0; i < word.size(); ++i) {
      for (const auto& [m, c] : env_.generator_bracket(word[i], x).terms()) {
        std::vector<std::size_t> term(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
        for (std::size_t s = 0; s < slot::count; ++s) term.insert(term.end(), m.exponents[s], s);
        term.insert(term.end(), word.begin() + static_cast<std::ptrdiff_t>(i + 1), word.end());
        NOPoly piece = multiply_word(NOPoly::monomial(u), term);
        piece *= c;
        out += piece;
      }
    }
    return out;
  }

  NOPoly multiply_word(NOPoly acc, const std::vector<std::size_t>& word) const {
    for (std::size_t g : word) {
      NOPoly next;
      for (const auto& [m, c] : acc.terms()) {
        NOPoly t = times_generator(m, g);
        t *= c;
        next += t;
      }
      acc = std::move(next);
    }
    return acc;
  }

  NOPoly operator()(const NOPoly& p, const NOPoly& q) const {
    NOPoly out;
    for (const auto& [mq, cq] : q.terms()) {
      std::vector<std::size_t> word;
      for (std::size_t s = 0; s < slot::count; ++s) word.insert(word.end(), mq.exponents[s], s);
      NOPoly t = multiply_word(p, word);
      t *= cq;
      out += t;
    }
    return out;
  }

 private:
  const EnvelopingAlgebra& env_;
};

}  // namespace galilei::testing
