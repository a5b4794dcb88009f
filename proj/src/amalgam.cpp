#include "mvtensor/amalgam.hpp"

#include <set>

#include "mvtensor/error.hpp"

namespace mvt {

namespace {

std::string sanitize(std::string label) {
  for (auto& ch : label) {
    if (ch == '|') ch = '.';
  }
  return label;
}

struct Fiber {
  PointSetPtr points;
  std::vector<std::size_t> left;   // W → X
  std::vector<std::size_t> right;  // W → Y
};

Fiber fiber_product(const Hom& z_a, const Hom& z_b) {
  const auto& a = *z_a.target;
  const auto& b = *z_b.target;
  const auto& z = *z_a.source;
  if (z_a.source != z_b.source && !same_carrier(*z_a.source, *z_b.source)) {
    throw Error(ErrorKind::EmbeddingFailure, "the two embeddings start from different algebras");
  }
  for (const Hom* h : {&z_a, &z_b}) {
    if (auto v = hom_violation(*h)) throw Error(ErrorKind::EmbeddingFailure, "leg is not a homomorphism: " + *v);
    if (!h->injective()) throw Error(ErrorKind::EmbeddingFailure, "leg is not injective");
  }
  Fiber w;
  std::vector<std::string> labels;
  std::set<std::size_t> hit_x, hit_y;
  for (std::size_t x = 0; x < a.points()->size(); ++x) {
    for (std::size_t y = 0; y < b.points()->size(); ++y) {
      bool agree = true;
      for (Index i = 0; i < z.size() && agree; ++i) {
        agree = a.element(z_a(i)).at(x) == b.element(z_b(i)).at(y);
      }
      if (!agree) continue;
      w.left.push_back(x);
      w.right.push_back(y);
      hit_x.insert(x);
      hit_y.insert(y);
      labels.push_back("(" + sanitize(a.points()->label(x)) + "," + sanitize(b.points()->label(y)) + ")");
    }
  }
  if (hit_x.size() != a.points()->size() || hit_y.size() != b.points()->size()) {
    throw Error(ErrorKind::EmbeddingFailure, "a projection of the fiber product is not onto its factor");
  }
  w.points = PointSet::make(std::move(labels));
  return w;
}

PointFunction pull_back(const PointSetPtr& w, const std::vector<std::size_t>& proj, const PointFunction& f) {
  std::vector<Rational01> values(proj.size());
  for (std::size_t i = 0; i < proj.size(); ++i) values[i] = f.at(proj[i]);
  return PointFunction(w, std::move(values));
}

Hom leg(const AlgebraPtr& from, const AlgebraPtr& e, const Fiber& w, const std::vector<std::size_t>& proj) {
  Hom h{from, e, std::vector<Index>(from->size())};
  for (Index i = 0; i < from->size(); ++i) {
    auto found = e->find(pull_back(w.points, proj, from->element(i)));
    if (!found) throw Error(ErrorKind::EmbeddingFailure, "amalgam misses the image of " + from->element(i).str());
    h.table[i] = *found;
  }
  return h;
}

Amalgam build(const Hom& z_a, const Hom& z_b, const Fiber& w, const AlgebraPtr& e) {
  Amalgam out{e, leg(z_a.target, e, w, w.left), leg(z_b.target, e, w, w.right)};
  verify_hom(out.f_a);
  verify_hom(out.f_b);
  out.square_commutes = true;
  for (Index i = 0; i < z_a.source->size(); ++i) {
    if (out.f_a(z_a(i)) != out.f_b(z_b(i))) out.square_commutes = false;
  }
  out.legs_injective = out.f_a.injective() && out.f_b.injective();
  if (!out.legs_injective) throw Error(ErrorKind::EmbeddingFailure, "an amalgam leg is not injective");
  return out;
}

}  // namespace

Amalgam amalgamate_mv(const Hom& z_a, const Hom& z_b, std::size_t cap) {
  Fiber w = fiber_product(z_a, z_b);
  std::vector<PointFunction> gens;
  for (Index g : z_a.target->generators()) gens.push_back(pull_back(w.points, w.left, z_a.target->element(g)));
  for (Index g : z_b.target->generators()) gens.push_back(pull_back(w.points, w.right, z_b.target->element(g)));
  auto e = generate_subalgebra(w.points, gens, Signature::mv(), cap);
  // Reducts: compare the MV structure only.
  Hom za{z_a.source->with_signature(Signature::mv()), z_a.target->with_signature(Signature::mv()), z_a.table};
  Hom zb{za.source, z_b.target->with_signature(Signature::mv()), z_b.table};
  return build(za, zb, w, e);
}

Amalgam amalgamate_pmv(const Hom& z_a, const Hom& z_b, std::size_t cap) {
  const auto& a = *z_a.target;
  const auto& b = *z_b.target;
  Signature sig = a.signature();
  if (sig.kind != b.signature().kind || sig.scalar_den != b.signature().scalar_den) {
    throw Error(ErrorKind::SignatureViolation, "amalgam legs carry different signatures");
  }
  sig.max_degree = std::max(sig.max_degree, b.signature().max_degree);
  Fiber w = fiber_product(z_a, z_b);
  AlgebraPtr e;
  if (sig.graded()) {
    std::vector<GradedGenerator> gens;
    for (Index g : a.generators()) gens.push_back({pull_back(w.points, w.left, a.element(g)), a.degree(g)});
    for (Index g : b.generators()) gens.push_back({pull_back(w.points, w.right, b.element(g)), b.degree(g)});
    e = generate_graded(w.points, gens, sig, cap);
  } else {
    std::vector<PointFunction> gens;
    for (Index g : a.generators()) gens.push_back(pull_back(w.points, w.left, a.element(g)));
    for (Index g : b.generators()) gens.push_back(pull_back(w.points, w.right, b.element(g)));
    e = generate_subalgebra(w.points, gens, sig, cap);
  }
  return build(z_a, z_b, w, e);
}

}  // namespace mvt
