#include "mvtensor/term.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "mvtensor/error.hpp"
#include "mvtensor/tensor.hpp"

namespace mvt {

std::string Term::str() const {
  switch (kind) {
    case TermKind::Zero: return "0";
    case TermKind::One: return "1";
    case TermKind::Var: return "x" + std::to_string(var);
    case TermKind::Neg: return "(neg " + args[0]->str() + ")";
    case TermKind::Oplus: return "(oplus " + args[0]->str() + " " + args[1]->str() + ")";
    case TermKind::Odot: return "(odot " + args[0]->str() + " " + args[1]->str() + ")";
    case TermKind::Prod: return "(prod " + args[0]->str() + " " + args[1]->str() + ")";
    case TermKind::Scal: return "(scal " + scalar.str() + " " + args[0]->str() + ")";
  }
  return "0";
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, Signature sig, int k) : text_(text), sig_(sig), k_(k) {}

  TermPtr run() {
    auto t = term();
    skip_space();
    if (pos_ != text_.size()) error("trailing input");
    return t;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw Error(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view atom() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')') {
      ++pos_;
    }
    if (start == pos_) error("expected a token");
    return text_.substr(start, pos_ - start);
  }

  int variable(std::string_view digits) {
    int index = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc() || end != digits.data() + digits.size()) error("bad variable index '" + std::string(digits) + "'");
    if (index < 1 || index > k_) {
      throw Error(ErrorKind::SignatureViolation,
                  "variable x" + std::to_string(index) + " outside arity " + std::to_string(k_));
    }
    return index;
  }

  TermPtr leaf(TermKind kind, int var = 0) {
    auto t = std::make_shared<Term>();
    t->kind = kind;
    t->var = var;
    return t;
  }

  TermPtr term() {
    skip_space();
    if (pos_ >= text_.size()) error("unexpected end of input");
    if (text_[pos_] == ')') error("unexpected ')'");
    if (text_[pos_] != '(') {
      auto a = atom();
      if (a == "0") return leaf(TermKind::Zero);
      if (a == "1") return leaf(TermKind::One);
      if (a.size() > 1 && a[0] == 'x') return leaf(TermKind::Var, variable(a.substr(1)));
      error("unknown atom '" + std::string(a) + "'");
    }
    ++pos_;
    const auto head = atom();
    auto node = std::make_shared<Term>();
    std::size_t arity = 0;
    if (head == "var") {
      node->kind = TermKind::Var;
      node->var = variable(atom());
    } else if (head == "neg") {
      node->kind = TermKind::Neg;
      arity = 1;
    } else if (head == "oplus") {
      node->kind = TermKind::Oplus;
      arity = 2;
    } else if (head == "odot") {
      node->kind = TermKind::Odot;
      arity = 2;
    } else if (head == "prod") {
      if (!sig_.has_product()) throw Error(ErrorKind::SignatureViolation, "· is not in the " + to_string(sig_.kind) + " signature");
      node->kind = TermKind::Prod;
      arity = 2;
    } else if (head == "scal") {
      if (!sig_.has_scalars()) {
        throw Error(ErrorKind::SignatureViolation, "scalars are not in the " + to_string(sig_.kind) + " signature");
      }
      node->kind = TermKind::Scal;
      const auto text = atom();
      try {
        node->scalar = Rational01::parse(text);
      } catch (const Error&) {
        error("bad scalar '" + std::string(text) + "'");
      }
      arity = 1;
    } else {
      error("unknown connective '" + std::string(head) + "'");
    }
    for (std::size_t i = 0; i < arity; ++i) node->args.push_back(term());
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ')') error("expected ')'");
    ++pos_;
    return node;
  }

  std::string_view text_;
  Signature sig_;
  int k_;
  std::size_t pos_ = 0;
};

}  // namespace

TermPtr parse_term(std::string_view text, Signature sig, int k) { return Parser(text, sig, k).run(); }

Rational01 eval_term(const Term& t, std::span<const Rational01> assignment) {
  switch (t.kind) {
    case TermKind::Zero: return Rational01::zero();
    case TermKind::One: return Rational01::one();
    case TermKind::Var:
      if (t.var < 1 || static_cast<std::size_t>(t.var) > assignment.size()) {
        throw Error(ErrorKind::DomainMismatch, "assignment misses x" + std::to_string(t.var));
      }
      return assignment[t.var - 1];
    case TermKind::Neg: return neg(eval_term(*t.args[0], assignment));
    case TermKind::Oplus: return oplus(eval_term(*t.args[0], assignment), eval_term(*t.args[1], assignment));
    case TermKind::Odot: return odot(eval_term(*t.args[0], assignment), eval_term(*t.args[1], assignment));
    case TermKind::Prod: return times(eval_term(*t.args[0], assignment), eval_term(*t.args[1], assignment));
    case TermKind::Scal: return times(t.scalar, eval_term(*t.args[0], assignment));
  }
  return Rational01::zero();
}

PointSetPtr grid_points(int k, std::int64_t d, std::size_t max_points) {
  if (k < 1 || d < 1) throw Error(ErrorKind::DomainMismatch, "grid needs k ≥ 1 and d ≥ 1");
  std::size_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= static_cast<std::size_t>(d + 1);
    if (total > max_points) {
      throw Error(ErrorKind::GridTooLarge, "grid (Ł_" + std::to_string(d) + ")^" + std::to_string(k) + " exceeds " +
                                               std::to_string(max_points) + " points");
    }
  }
  std::vector<std::string> labels;
  for (std::int64_t j = 0; j <= d; ++j) labels.push_back(Rational01(j, d).str());
  PointSet axis(std::move(labels));
  return PointSet::power(axis, k);
}

std::vector<Rational01> grid_coordinates(const PointSet& grid, std::int64_t d, std::size_t point) {
  std::vector<Rational01> out;
  for (auto c : grid.coordinates(point)) out.emplace_back(static_cast<std::int64_t>(c), d);
  return out;
}

PointFunction term_function_on_grid(const Term& t, int k, std::int64_t d, std::size_t max_points) {
  auto grid = grid_points(k, d, max_points);
  std::vector<Rational01> values(grid->size());
  for (std::size_t q = 0; q < grid->size(); ++q) values[q] = eval_term(t, grid_coordinates(*grid, d, q));
  return PointFunction(grid, std::move(values));
}

GridVerdict grid_equal(const Term& t1, const Term& t2, int k, std::int64_t d) {
  const auto f = term_function_on_grid(t1, k, d);
  const auto g = term_function_on_grid(t2, k, d);
  for (std::size_t q = 0; q < f.values().size(); ++q) {
    if (f.at(q) != g.at(q)) return {false, grid_coordinates(f.domain(), d, q), f.at(q), g.at(q)};
  }
  return {};
}

namespace {

CarrierComparison compare(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  CarrierComparison out;
  out.left_size = a.size();
  out.right_size = b.size();
  for (Index i : a.sorted_order()) {
    if (!b.find(a.element(i).value_vector())) {
      out.witness = a.element(i).str() + " only in the first carrier";
      return out;
    }
  }
  for (Index i : b.sorted_order()) {
    if (!a.find(b.element(i).value_vector())) {
      out.witness = b.element(i).str() + " only in the second carrier";
      return out;
    }
  }
  out.equal = true;
  return out;
}

}  // namespace

FreeEvidence free_pmv_evidence(int k, std::int64_t d, int degree, std::size_t cap, bool omit_products) {
  if (degree < 1) throw Error(ErrorKind::DomainMismatch, "evidence needs a positive degree bound");
  FreeEvidence ev;
  ev.k = k;
  ev.d = d;
  ev.degree = degree;
  auto grid = grid_points(k, d);
  std::vector<PointFunction> projections;
  for (int i = 0; i < k; ++i) {
    std::vector<Rational01> values(grid->size());
    for (std::size_t q = 0; q < grid->size(); ++q) values[q] = grid_coordinates(*grid, d, q)[i];
    projections.emplace_back(grid, std::move(values));
  }

  ev.pmv_closure = generate_subalgebra(grid, projections, Signature::pmv(degree), cap);
  ev.projections_mv = generate_subalgebra(grid, projections, Signature::mv(), cap);

  // The multiplication map T^N(F) → [0,1]^grid sends a_1⊗…⊗a_n to a_1⋯a_n;
  // its image is generated by those products.
  const auto& f = *ev.projections_mv;
  std::set<std::vector<Rational01>> seen;
  std::vector<PointFunction> layer(f.carrier().begin(), f.carrier().end());
  std::vector<PointFunction> gens;
  for (const auto& g : layer) {
    if (seen.insert(g.value_vector()).second) gens.push_back(g);
  }
  const int top = omit_products ? 1 : degree;
  for (int n = 2; n <= top; ++n) {
    std::vector<PointFunction> next;
    for (const auto& p : layer) {
      for (const auto& a : f.carrier()) {
        auto product = pointwise(MvOp::Prod, p, a);
        if (seen.insert(product.value_vector()).second) {
          gens.push_back(product);
          next.push_back(std::move(product));
        }
      }
    }
    layer = std::move(next);
  }
  ev.tower_image = generate_subalgebra(grid, gens, Signature::mv(), cap);
  ev.pmv = compare(*ev.pmv_closure, *ev.tower_image);

  std::vector<GradedGenerator> riesz_gens;
  for (const auto& p : projections) riesz_gens.push_back({p, 0});
  ev.riesz_closure = generate_graded(grid, riesz_gens, Signature::riesz(d, 1), cap);
  ev.scalar_tensor = tensor(chain(d), ev.projections_mv, cap).product;
  ev.riesz = compare(*ev.riesz_closure, *ev.scalar_tensor);
  return ev;
}

}  // namespace mvt
