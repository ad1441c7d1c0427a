#pragma once

#include "tensorann/linalg.hpp"
#include "tensorann/partitions.hpp"
#include "tensorann/uea.hpp"
#include "tensorann/weights.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tensorann {

inline constexpr std::size_t kDefaultTensorCap = 4096;
inline constexpr std::size_t kYoungDegreeCap = 5;

enum class Family { gl, sl, o, sp };
std::string to_string(Family f);
std::optional<Family> parse_family(std::string_view text);

/// The index set J_n = {1, -1, 2, -2, ...} (first n terms) listed in row order
/// 1, 2, ..., -2, -1, so that the standard Borel subalgebra is upper triangular.
std::vector<int> ordered_labels(std::size_t n);

/// A classical matrix Lie algebra realized on the rows labelled by J_n.
class MatrixAlgebra {
public:
    Family family() const noexcept { return family_; }
    std::size_t n() const noexcept { return labels_.size(); }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<int>& labels() const noexcept { return labels_; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<Matrix>& basis() const noexcept { return basis_; }
    /// Size of the spanning family the basis was extracted from (o and sp use redundant families).
    std::size_t spanning_size() const noexcept { return spanning_size_; }

    /// Row position of a label; throws if the label is not in J_n.
    std::size_t position(int label) const;
    /// Matrix unit E_{i,j} addressed by labels.
    Matrix unit(int i, int j) const;
    bool contains(const Matrix& x) const;
    /// Coordinates of x in basis(); throws if x is not in the algebra.
    Vector coordinates(const Matrix& x) const;
    LiePresentation presentation() const;

private:
    friend MatrixAlgebra build_algebra(Family family, std::size_t n);
    Family family_ = Family::gl;
    std::vector<int> labels_;
    std::vector<std::string> names_;
    std::vector<Matrix> basis_;
    std::size_t spanning_size_ = 0;
};

/// gl and sl use the type-A basis of type_a_basis (so presentation() matches gl_presentation /
/// sl_presentation). o and sp need an even n. Throws std::invalid_argument otherwise.
MatrixAlgebra build_algebra(Family family, std::size_t n);

/// Action of an n x n matrix on V^{(p,q)} = V^p (x) V_*^q: natural on the first p factors,
/// -x^T on the last q. Factor 0 is the most significant tensor index.
Matrix tensor_operator(const Matrix& x, std::size_t p, std::size_t q);

class TensorRep {
public:
    /// Throws std::length_error if n^(p+q) exceeds cap.
    TensorRep(MatrixAlgebra algebra, std::size_t p, std::size_t q, std::size_t cap = kDefaultTensorCap);

    const MatrixAlgebra& algebra() const noexcept { return algebra_; }
    std::size_t p() const noexcept { return p_; }
    std::size_t q() const noexcept { return q_; }
    std::size_t n() const noexcept { return algebra_.n(); }
    std::size_t dim() const noexcept { return dim_; }
    /// One operator per algebra basis element.
    const std::vector<Matrix>& action() const noexcept { return action_; }
    /// Action of any n x n matrix (not necessarily in the algebra).
    Matrix op(const Matrix& x) const { return tensor_operator(x, p_, q_); }

private:
    MatrixAlgebra algebra_;
    std::size_t p_, q_, dim_;
    std::vector<Matrix> action_;
};

/// True iff ops[i] ops[j] - ops[j] ops[i] = op([x_i, x_j]) for all basis pairs.
bool is_homomorphism(const LiePresentation& p, const std::vector<Matrix>& ops);

/// Contraction V^{(p,q)} -> V^{(p-1,q-1)} pairing tensor factor i (1-based, among the first p)
/// with dual factor j (1-based, among the last q).
Matrix contraction(std::size_t p, std::size_t q, std::size_t i, std::size_t j, std::size_t n);
/// Intersection of the kernels of all contractions; the whole space when p or q is 0.
Subspace kernel_space(std::size_t p, std::size_t q, std::size_t n);

/// Row symmetrizer times column antisymmetrizer of the row-filled tableau of shape lambda,
/// acting on V^{|lambda|} with dim V = n.
Matrix young_projector(const Partition& lambda, std::size_t n);

/// V_{lambda mu} = kernel_space(p, q) intersected with the image of c_lambda (x) c_mu.
Subspace module_V_lambda_mu(std::size_t n, const PartitionPair& pair, std::size_t cap = kDefaultTensorCap);

/// Operators defining weights for a gl-type algebra acting on some space: diagonal Cartan
/// operators (one per coordinate) and the positive and negative root operators.
struct WeightFrame {
    std::vector<Matrix> cartan;
    std::vector<Matrix> raising;
    std::vector<Matrix> lowering;
};

/// Frame of gl(m) sitting inside the algebra of rep on the labels J_m (m <= n). Weights are read
/// in the row order of J_m. Works for gl and sl algebras (the Cartan operators are the E_ii).
WeightFrame gl_frame(const TensorRep& rep, std::size_t m);
inline WeightFrame gl_frame(const TensorRep& rep) { return gl_frame(rep, rep.n()); }

struct WeightedVector {
    FiniteWeight weight;
    Vector vector;
};

/// Basis of the joint kernel of the raising operators on sub, split into weight vectors and
/// sorted by decreasing weight. Throws std::invalid_argument if sub is not invariant.
std::vector<WeightedVector> highest_weight_vectors(const Subspace& sub, const WeightFrame& frame);

using WeightMultiset = std::map<FiniteWeight, std::size_t>;
/// Highest weights of the simple constituents with multiplicity. Throws std::logic_error if
/// the Weyl dimensions do not add up to dim(sub).
WeightMultiset decompose(const Subspace& sub, const WeightFrame& frame);

/// Evaluates u in the representation with ops[i] the action of basis element i.
Matrix rep_uea(const UEAElement& u, const std::vector<Matrix>& ops);

/// Action of an n x n matrix on S^k(C^n) in the monomial basis (exponent vectors in
/// lexicographically decreasing order).
Matrix symmetric_power_operator(const Matrix& x, unsigned k);
std::vector<Matrix> symmetric_power_ops(const std::vector<Matrix>& basis, unsigned k);

struct NilpotentReport {
    std::size_t tensor_dim = 0;
    unsigned nilpotency_order = 0;   // k: x^k = 0 on V and V_*
    unsigned bound = 0;              // (k-1)(p+q)+1
    bool bound_annihilates = false;  // op(x)^bound == 0
    std::optional<unsigned> minimal_exponent;  // least e <= bound with op(x)^e == 0
    bool in_algebra = false;         // whether x lies in the span of the algebra basis
};

/// Checks x^{(k-1)(p+q)+1} = 0 on V^{(p,q)}. Throws std::invalid_argument unless x^k = 0.
NilpotentReport verify_nilpotent_annihilator(const MatrixAlgebra& alg, std::size_t p, std::size_t q, const Matrix& x,
                                             unsigned k, std::size_t cap = kDefaultTensorCap);

struct LocallyCentralReport {
    WeightMultiset constituents;    // gl(m) highest weights of the restricted module
    std::vector<Rational> scalars;  // distinct Casimir scalars, ascending
    UEAElement element;             // product of (z - c) over the scalars
    LiePresentation presentation;   // the small algebra the element lives in
    bool annihilates = false;
    std::size_t module_dim = 0;
};

/// Restricts rep to gl(m) or sl(m) (traceless) on the labels J_m and builds the product of
/// (z - c_i) over the Casimir scalars of its constituents. For gl(m) the Casimir of the trace
/// form is used since the Killing form is degenerate. Throws std::logic_error if the Casimir
/// does not act by a scalar on a constituent.
LocallyCentralReport locally_central_annihilator(const TensorRep& rep, std::size_t m, bool traceless);

/// (1/m!) sum over orderings of tr(ops[a_1] ... ops[a_m]).
Rational polarized_trace(const std::vector<Matrix>& ops, const std::vector<std::size_t>& args);
/// True iff sum_k F(x_1, ..., [y, x_k], ..., x_m) = 0 for F the polarized trace of degree m, all
/// basis y and all multisets of basis arguments. Brackets come from the structure constants.
/// m is at most 4.
bool trace_invariant_check(const LiePresentation& p, const std::vector<Matrix>& ops, unsigned m);

}  // namespace tensorann
