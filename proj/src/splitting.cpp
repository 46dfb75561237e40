#include "conj/splitting.hpp"

#include <algorithm>
#include <numeric>

#include "conj/error.hpp"
#include "conj/factor_qq.hpp"

namespace conjprod {

namespace {

NFElement embed(const NFElement& a, const NFElement& image_of_generator) {
  NFElement acc = image_of_generator.zero_like();
  const auto& c = a.coords();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * image_of_generator + image_of_generator.field().from_rational(c[k]);
  }
  return acc;
}

bool contains(const std::vector<NFElement>& v, const NFElement& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

SplittingField build_splitting_field(const Poly<Rational>& f_in, std::uint64_t rng_seed) {
  if (f_in.degree() < 2 || f_in.degree() > kMaxSplittingInputDegree) {
    fail(ErrorCode::DegreeCapExceeded,
         "splitting fields are built for 2 <= deg f <= " +
             std::to_string(kMaxSplittingInputDegree) + ", got degree " +
             std::to_string(f_in.degree()));
  }
  const Poly<Rational> f = f_in.monic();
  if (!is_squarefree(f)) {
    fail(ErrorCode::NotSeparable, "f is not separable: " + to_text(f));
  }
  if (!is_irreducible_over_Q(f)) {
    fail(ErrorCode::NotIrreducible, "f is not irreducible over Q: " + to_text(f));
  }
  const auto n = static_cast<std::size_t>(f.degree());

  NumberField field = NumberField::trusted(f);
  std::vector<NFElement> roots{field.generator()};
  std::vector<long> weights{1};

  while (roots.size() < n) {
    NFPoly cofactor = lift_poly(field, f);
    for (const NFElement& r : roots) cofactor = cofactor / NFPoly::linear_root(r);

    const NFPoly* nonlinear = nullptr;
    const auto factors = trager_factor(cofactor, rng_seed);
    for (const auto& e : factors) {
      if (e.factor.degree() == 1) {
        const NFElement r = -e.factor[0];
        if (!contains(roots, r)) {
          roots.push_back(r);
          weights.push_back(0);
        }
      } else if (nonlinear == nullptr) {
        nonlinear = &e.factor;
      }
    }
    if (roots.size() == n) break;
    if (nonlinear == nullptr) {
      fail(ErrorCode::InternalInconsistency, "cofactor has no roots and no factors");
    }
    if (field.degree() * nonlinear->degree() > kMaxSplittingFieldDegree) {
      fail(ErrorCode::DegreeCapExceeded,
           "splitting field degree would exceed " +
               std::to_string(kMaxSplittingFieldDegree));
    }
    const PrimitiveElement pe = nf_primitive_element(field, *nonlinear);
    for (NFElement& r : roots) r = embed(r, pe.old_generator);
    roots.push_back(pe.adjoined);
    weights.push_back(pe.t);
    field = pe.field;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return roots[a] < roots[b]; });
  std::vector<NFElement> sorted_roots;
  std::vector<long> sorted_weights;
  for (std::size_t i : order) {
    sorted_roots.push_back(roots[i]);
    sorted_weights.push_back(weights[i]);
  }
  for (const NFElement& r : sorted_roots) {
    if (!poly_eval(lift_poly(field, f), r).is_zero()) {
      fail(ErrorCode::InternalInconsistency, "computed root does not annihilate f");
    }
  }
  return SplittingField(field, std::move(sorted_roots), f, std::move(sorted_weights));
}

Automorphism::Automorphism(const SplittingField& m, NFElement gamma_image) {
  if (gamma_image.field() != m.field()) {
    fail(ErrorCode::FieldMismatch, "γ-image outside the splitting field");
  }
  powers_.push_back(gamma_image.one_like());
  for (int k = 1; k < m.degree(); ++k) powers_.push_back(powers_.back() * gamma_image);
  const auto& roots = m.roots();
  for (const NFElement& r : roots) {
    const NFElement img = apply(r);
    const auto it = std::find(roots.begin(), roots.end(), img);
    if (it == roots.end()) {
      fail(ErrorCode::InternalInconsistency, "automorphism does not permute the roots");
    }
    perm_.push_back(static_cast<std::size_t>(it - roots.begin()));
  }
}

bool Automorphism::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] != i) return false;
  }
  return true;
}

NFElement Automorphism::apply(const NFElement& a) const {
  if (a.field() != powers_[0].field()) {
    fail(ErrorCode::FieldMismatch, "automorphism applied outside its field");
  }
  NFElement acc = powers_[0].zero_like();
  const auto& c = a.coords();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    acc += powers_[k] * powers_[0].field().from_rational(c[k]);
  }
  return acc;
}

std::vector<Automorphism> automorphisms(const SplittingField& m) {
  const NumberField& field = m.field();
  const NFPoly gamma_minpoly = lift_poly(field, field.minpoly());
  const auto& roots = m.roots();
  const auto& w = m.generator_weights();

  // Every conjugate of γ = sum w_i r_i is sum w_i r_π(i) for some
  // permutation π of the roots; keep the candidates that annihilate the
  // minimal polynomial of γ.
  std::vector<std::size_t> pi(roots.size());
  std::iota(pi.begin(), pi.end(), 0);
  std::vector<NFElement> images;
  do {
    NFElement cand = field.zero();
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (w[i] != 0) cand += roots[pi[i]] * field.from_rational(Rational(w[i]));
    }
    if (!contains(images, cand) && poly_eval(gamma_minpoly, cand).is_zero()) {
      images.push_back(cand);
    }
  } while (std::next_permutation(pi.begin(), pi.end()));

  if (images.size() != static_cast<std::size_t>(field.degree())) {
    fail(ErrorCode::InternalInconsistency,
         "found " + std::to_string(images.size()) + " conjugates of γ in M, expected " +
             std::to_string(field.degree()));
  }
  const NFElement gamma = field.generator();
  std::sort(images.begin(), images.end(), [&](const NFElement& a, const NFElement& b) {
    if ((a == gamma) != (b == gamma)) return a == gamma;
    return a < b;
  });
  std::vector<Automorphism> out;
  out.reserve(images.size());
  for (NFElement& img : images) out.emplace_back(m, std::move(img));
  return out;
}

NFElement apply_automorphism(const Automorphism& sigma, const NFElement& a) {
  return sigma.apply(a);
}

NFPoly apply_to_poly(const Automorphism& sigma, const NFPoly& g) {
  return g.map([&](const NFElement& c) { return sigma.apply(c); });
}

Automorphism compose(const SplittingField& m, const Automorphism& sigma,
                     const Automorphism& tau) {
  return Automorphism(m, sigma.apply(tau.gamma_image()));
}

std::vector<std::vector<std::size_t>> composition_table(
    const std::vector<Automorphism>& group) {
  std::vector<std::vector<std::size_t>> table(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (std::size_t j = 0; j < group.size(); ++j) {
      const NFElement img = group[i].apply(group[j].gamma_image());
      std::size_t k = 0;
      while (k < group.size() && !(group[k].gamma_image() == img)) ++k;
      if (k == group.size()) {
        fail(ErrorCode::InternalInconsistency, "automorphism list is not closed");
      }
      table[i].push_back(k);
    }
  }
  return table;
}

std::string cycle_notation(const std::vector<std::size_t>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == start) continue;
    out += "(";
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) out += " ";
      out += std::to_string(i);
      first = false;
      i = perm[i];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace conjprod
