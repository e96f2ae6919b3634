#include "galilei/enveloping.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace galilei {

const std::array<std::string, slot::count>& slot_labels() {
  static const std::array<std::string, slot::count> labels{"N1", "N2", "P1", "P2", "H", "M"};
  return labels;
}

Monomial Monomial::generator(std::size_t s) {
  Monomial m;
  m.exponents.at(s) = 1;
  return m;
}

unsigned Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0U); }

std::string Monomial::key() const {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(exponents[i]);
  }
  return out;
}

Monomial Monomial::from_key(const std::string& key) {
  Monomial m;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < slot::count; ++i) {
    const std::size_t end = key.find(',', pos);
    if ((i + 1 < slot::count) == (end == std::string::npos)) {
      throw std::invalid_argument("Monomial: expected six comma-separated exponents in '" + key + "'");
    }
    const std::string part = key.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 4) {
      throw std::invalid_argument("Monomial: bad exponent '" + part + "' in '" + key + "'");
    }
    m.exponents[i] = static_cast<std::uint16_t>(std::stoul(part));
    pos = end + 1;
  }
  return m;
}

NOPoly NOPoly::constant(const Rational& c) { return monomial(Monomial{}, c); }

NOPoly NOPoly::generator(std::size_t s) { return monomial(Monomial::generator(s), 1); }

NOPoly NOPoly::monomial(const Monomial& m, const Rational& c) {
  NOPoly p;
  p.add_term(m, c);
  return p;
}

Rational NOPoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational{} : it->second;
}

unsigned NOPoly::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void NOPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NOPoly& NOPoly::operator+=(const NOPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

NOPoly& NOPoly::operator-=(const NOPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

NOPoly& NOPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

NOPoly NOPoly::operator-() const {
  NOPoly out = *this;
  return out *= Rational(-1);
}

std::string NOPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational a = c.abs();
    const bool is_one = m.degree() == 0;
    if (a != Rational(1) || is_one) os << a;
    bool need_sep = a != Rational(1);
    for (std::size_t s = 0; s < slot::count; ++s) {
      if (m.exponents[s] == 0) continue;
      if (need_sep) os << "*";
      os << slot_labels()[s];
      if (m.exponents[s] > 1) os << "^" << m.exponents[s];
      need_sep = true;
    }
  }
  return os.str();
}

namespace {

using Word = std::vector<std::uint8_t>;

Monomial monomial_of_sorted(const Word& w) {
  Monomial m;
  for (auto s : w) ++m.exponents[s];
  return m;
}

Word word_of(const Monomial& m) {
  Word w;
  for (std::size_t s = 0; s < slot::count; ++s) w.insert(w.end(), m.exponents[s], static_cast<std::uint8_t>(s));
  return w;
}

std::size_t inversions(const Word& w) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) n += w[i] > w[j];
  }
  return n;
}

}  // namespace

EnvelopingAlgebra::EnvelopingAlgebra(const LieAlgebra& alg) {
  if (alg.dimension() != gal::dimension) {
    throw std::invalid_argument("EnvelopingAlgebra: expected the 7-dimensional extended Galilei algebra");
  }
  const auto e = alg.index_of("E");
  if (!e) throw std::invalid_argument("EnvelopingAlgebra: algebra has no central element 'E'");
  if (!central_defect(alg, *e).is_zero()) throw std::invalid_argument("EnvelopingAlgebra: 'E' is not central");

  index_to_slot_.assign(alg.dimension(), -1);
  for (std::size_t s = 0; s < slot::count; ++s) {
    const auto idx = alg.index_of(slot_labels()[s]);
    if (!idx) throw std::invalid_argument("EnvelopingAlgebra: missing generator '" + slot_labels()[s] + "'");
    slot_to_index_[s] = *idx;
    index_to_slot_[*idx] = static_cast<int>(s);
  }
  for (std::size_t a = 0; a < slot::count; ++a) {
    for (std::size_t b = 0; b < slot::count; ++b) {
      brackets_[a][b] = embed(bracket(alg, AlgebraElement::basis(alg.dimension(), slot_to_index_[a]),
                                       AlgebraElement::basis(alg.dimension(), slot_to_index_[b])));
    }
  }
}

NOPoly EnvelopingAlgebra::embed(const AlgebraElement& x) const {
  if (x.dimension() != index_to_slot_.size()) throw std::invalid_argument("embed: dimension mismatch");
  NOPoly p;
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    if (x[i].is_zero()) continue;
    const int s = index_to_slot_[i];
    p.add_term(s < 0 ? Monomial{} : Monomial::generator(static_cast<std::size_t>(s)), x[i]);
  }
  return p;
}

NOPoly EnvelopingAlgebra::normal_order(const std::vector<std::uint8_t>& word) const {
  // Pending words keyed by (length, inversions, word), processed largest
  // first. Every rewrite produces strictly smaller keys (a swap removes one
  // inversion, a bracket term shortens the word), so each distinct word is
  // expanded at most once and like terms merge before expansion.
  using Key = std::tuple<std::size_t, std::size_t, Word>;
  std::map<Key, Rational, std::greater<>> pending;
  auto push = [&pending](Word w, const Rational& c) {
    if (c.is_zero()) return;
    Key key{w.size(), inversions(w), std::move(w)};
    auto [it, inserted] = pending.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) pending.erase(it);
    }
  };
  for (auto s : word) {
    if (s >= slot::count) throw std::invalid_argument("normal_order: slot out of range");
  }
  push(word, Rational(1));

  NOPoly out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = std::get<2>(node.key());
    const Rational& c = node.mapped();

    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
    if (i + 1 >= w.size()) {
      out.add_term(monomial_of_sorted(w), c);
      continue;
    }
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    push(std::move(swapped), c);

    for (const auto& [m, coeff] : brackets_[w[i]][w[i + 1]].terms()) {
      Word reduced(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      const Word middle = word_of(m);
      reduced.insert(reduced.end(), middle.begin(), middle.end());
      reduced.insert(reduced.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
      push(std::move(reduced), c * coeff);
    }
  }
  return out;
}

NOPoly no_mul(const EnvelopingAlgebra& env, const NOPoly& p, const NOPoly& q) {
  NOPoly out;
  for (const auto& [mp, cp] : p.terms()) {
    const Word left = word_of(mp);
    for (const auto& [mq, cq] : q.terms()) {
      Word w = left;
      const Word right = word_of(mq);
      w.insert(w.end(), right.begin(), right.end());
      NOPoly term = env.normal_order(w);
      term *= cp * cq;
      out += term;
    }
  }
  return out;
}

NOPoly no_commutator(const EnvelopingAlgebra& env, const NOPoly& p, const NOPoly& q) {
  return no_mul(env, p, q) - no_mul(env, q, p);
}

bool is_central(const EnvelopingAlgebra& env, const NOPoly& p) {
  for (std::size_t s = 0; s < slot::count; ++s) {
    if (!no_commutator(env, p, NOPoly::generator(s)).is_zero()) return false;
  }
  return true;
}

NOPoly substitute(const EnvelopingAlgebra& env, const NOPoly& p, const std::array<NOPoly, slot::count>& images) {
  NOPoly out;
  for (const auto& [m, c] : p.terms()) {
    NOPoly acc = NOPoly::constant(c);
    for (std::size_t s = 0; s < slot::count; ++s) {
      for (unsigned e = 0; e < m.exponents[s]; ++e) acc = no_mul(env, acc, images[s]);
    }
    out += acc;
  }
  return out;
}

std::array<NOPoly, slot::count> basis_change_images(const EnvelopingAlgebra& env, const BasisChange& change) {
  const RationalMatrix& t = change.matrix;
  if (t.rows() != gal::dimension || t.cols() != gal::dimension) {
    throw std::invalid_argument("basis_change_images: matrix size does not match the algebra");
  }
  std::array<NOPoly, slot::count> images;
  for (std::size_t s = 0; s < slot::count; ++s) {
    const std::size_t row = env.algebra_index(s);
    AlgebraElement x(gal::dimension);
    for (std::size_t j = 0; j < gal::dimension; ++j) x[j] = t(row, j);
    images[s] = env.embed(x);
  }
  return images;
}

NOPoly casimir_c1(const ExtensionParams& params) {
  if (params.m.is_zero()) throw std::domain_error("casimir_c1: requires m != 0");
  const Rational w = -Rational(1) / (Rational(2) * params.m);
  NOPoly p = NOPoly::generator(slot::H);
  p += w * casimir_c1_prime();
  return p;
}

NOPoly casimir_c2(const ExtensionParams& params) {
  if (params.m.is_zero()) throw std::domain_error("casimir_c2: requires m != 0");
  NOPoly p = NOPoly::generator(slot::M);
  p += (-Rational(1) / params.m) * casimir_c2_prime();
  p += (-params.k / params.m) * NOPoly::generator(slot::H);
  return p;
}

NOPoly casimir_c1_prime() {
  Monomial p1sq, p2sq;
  p1sq.exponents[slot::P1] = 2;
  p2sq.exponents[slot::P2] = 2;
  NOPoly p;
  p.add_term(p1sq, 1);
  p.add_term(p2sq, 1);
  return p;
}

NOPoly casimir_c2_prime() {
  // N1 P2 - N2 P1: every N precedes every P, so both terms are already normal.
  Monomial n1p2, n2p1;
  n1p2.exponents[slot::N1] = 1;
  n1p2.exponents[slot::P2] = 1;
  n2p1.exponents[slot::N2] = 1;
  n2p1.exponents[slot::P1] = 1;
  NOPoly p;
  p.add_term(n1p2, 1);
  p.add_term(n2p1, -1);
  return p;
}

std::vector<Monomial> monomials_up_to(unsigned max_degree) {
  std::vector<Monomial> out;
  Monomial m;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t s, unsigned remaining) {
    if (s == slot::count) {
      out.push_back(m);
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      m.exponents[s] = static_cast<std::uint16_t>(e);
      rec(s + 1, remaining - e);
    }
    m.exponents[s] = 0;
  };
  rec(0, max_degree);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return std::make_tuple(a.degree(), a.exponents) < std::make_tuple(b.degree(), b.exponents);
  });
  return out;
}

CentralizerBasis centralizer_basis(const EnvelopingAlgebra& env, unsigned max_degree, Execution exec) {
  const std::vector<Monomial> columns = monomials_up_to(max_degree);

  using Images = std::array<NOPoly, slot::count>;
  const std::vector<Images> images = map_indices<Images>(columns.size(), exec, [&](std::size_t c) {
    Images out;
    const NOPoly p = NOPoly::monomial(columns[c]);
    for (std::size_t s = 0; s < slot::count; ++s) out[s] = no_commutator(env, p, NOPoly::generator(s));
    return out;
  });

  std::map<std::pair<std::size_t, Monomial>, std::size_t> row_index;
  for (const auto& img : images) {
    for (std::size_t s = 0; s < slot::count; ++s) {
      for (const auto& [m, c] : img[s].terms()) row_index.try_emplace({s, m}, 0);
    }
  }
  std::size_t next = 0;
  for (auto& [key, idx] : row_index) idx = next++;

  RationalMatrix a(row_index.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t s = 0; s < slot::count; ++s) {
      for (const auto& [m, coeff] : images[c][s].terms()) a(row_index.at({s, m}), c) = coeff;
    }
  }

  CentralizerBasis result;
  result.max_degree = max_degree;
  for (const auto& x : nullspace(a, exec)) {
    NOPoly p;
    for (std::size_t c = 0; c < columns.size(); ++c) p.add_term(columns[c], x[c]);
    result.basis.push_back(std::move(p));
  }
  return result;
}

bool span_contains(const std::vector<NOPoly>& span, const NOPoly& p) {
  std::map<Monomial, std::size_t> rows;
  auto collect = [&rows](const NOPoly& q) {
    for (const auto& [m, c] : q.terms()) rows.try_emplace(m, 0);
  };
  for (const auto& q : span) collect(q);
  collect(p);
  std::size_t next = 0;
  for (auto& [m, idx] : rows) idx = next++;

  RationalMatrix a(rows.size(), span.size() + 1);
  for (std::size_t j = 0; j < span.size(); ++j) {
    for (const auto& [m, c] : span[j].terms()) a(rows.at(m), j) = c;
  }
  RationalMatrix without = a;
  for (const auto& [m, c] : p.terms()) a(rows.at(m), span.size()) = c;
  return rank(a, Execution::serial) == rank(without, Execution::serial);
}

}  // namespace galilei
