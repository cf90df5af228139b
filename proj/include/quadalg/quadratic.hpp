#pragma once

// Orthogonality dualities and the reduction J = z ⊥ l for quadratic algebras.

#include <string>
#include <utility>
#include <vector>

#include "quadalg/algebra.hpp"
#include "quadalg/identities.hpp"
#include "quadalg/linalg.hpp"

namespace quadalg {

struct DualityEntry {
  std::string name;
  bool applies = false;  // hypotheses of the duality are met by the input
  bool holds = false;
  Subspace lhs;
  Subspace rhs;
};

struct DualityReport {
  std::vector<DualityEntry> entries;

  bool all_applicable_hold() const {
    for (const auto& e : entries) {
      if (e.applies && !e.holds) return false;
    }
    return true;
  }

  const DualityEntry& at(const std::string& name) const {
    for (const auto& e : entries) {
      if (e.name == name) return e;
    }
    throw UnknownName("no duality entry '" + name + "'");
  }
};

inline DualityReport duality_report(const QuadraticAlgebra& qa) {
  const AlgebraPresentation& a = qa.alg();
  const Matrix& b = qa.gram();
  DualityReport r;
  auto add_entry = [&](std::string name, bool applies, Subspace lhs, Subspace rhs) {
    bool ok = lhs == rhs;
    r.entries.push_back({std::move(name), applies, ok, std::move(lhs), std::move(rhs)});
  };

  Subspace ann = annihilator(a);
  add_entry("ann_perp_is_square", true, orth_complement(b, ann), square(a));

  const bool jordan = holds(a, "jordan");
  Subspace nuc = nucleus(a);
  add_entry("center_perp_is_associator", jordan, orth_complement(b, nuc), associator_span(a));
  add_entry("nucleus_is_center", jordan, nuc, intersect(nuc, center_of(a)));

  const bool novikov = holds(a, "novikov");
  add_entry("commutant_is_bracket_perp", novikov, center_of(a),
            orth_complement(b, commutator_span(a)));
  Subspace as = left_nucleus(a);
  add_entry("nucleus_is_left_nucleus", novikov, nuc, as);
  add_entry("left_nucleus_is_associator_perp", novikov, as,
            orth_complement(b, associator_span(a)));
  add_entry("left_ann_is_ann", novikov, annihilator(a, AnnKind::left), ann);
  add_entry("right_ann_is_ann", novikov, annihilator(a, AnnKind::right), ann);
  return r;
}

/// Nonzero with totally isotropic annihilator.
inline bool is_reduced(const QuadraticAlgebra& qa) {
  if (qa.dim() == 0) return false;
  return is_totally_isotropic(qa.gram(), annihilator(qa.alg()));
}

struct Reduction {
  Subspace z;          // inside Ann, B|_z nondegenerate
  Subspace l_space;    // z^⊥
  QuadraticAlgebra l;  // z^⊥ in its RREF basis, restricted form
  Matrix z_embedding;  // columns: basis of z
  Matrix l_embedding;  // columns: basis of l
};

/// J = z ⊥ l with z a complement of Ann ∩ J² inside Ann and l = z^⊥ reduced.
inline Reduction reduce_quadratic(const QuadraticAlgebra& qa) {
  const AlgebraPresentation& a = qa.alg();
  if (a.is_zero_product()) {
    throw PreconditionFailed("non_abelian", "reduction needs a non-Abelian algebra");
  }
  const std::size_t n = a.dim();
  Subspace ann = annihilator(a);
  Subspace z0 = intersect(ann, square(a));
  std::vector<Vector> acc = z0.vectors();
  std::vector<Vector> added;
  std::size_t r = acc.size();
  for (const auto& v : ann.vectors()) {
    acc.push_back(v);
    std::size_t r2 = rank(Matrix::from_rows(acc, n));
    if (r2 > r) {
      added.push_back(v);
      r = r2;
    } else {
      acc.pop_back();
    }
  }
  Subspace z = span_normal_form(n, added);
  Subspace lsp = orth_complement(qa.gram(), z);
  QuadraticAlgebra l = restrict_to(qa, lsp);
  return {z, lsp, std::move(l), z.embedding(), lsp.embedding()};
}

}  // namespace quadalg
