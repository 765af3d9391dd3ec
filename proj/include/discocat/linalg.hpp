#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace discocat {

/// A real vector space with a fixed orthonormal basis, so V* is V.
class VectorSpace {
public:
    /// Throws DimensionError if dim == 0 or the basis labels are the wrong
    /// length or not unique.
    VectorSpace(std::string label, std::size_t dim,
                std::optional<std::vector<std::string>> basis_labels = std::nullopt);

    const std::string& label() const noexcept { return label_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::optional<std::vector<std::string>>& basis_labels() const noexcept { return basis_; }

    friend bool operator==(const VectorSpace&, const VectorSpace&) = default;

private:
    std::string label_;
    std::size_t dim_;
    std::optional<std::vector<std::string>> basis_;
};

/// Dense real tensor over an ordered list of spaces, stored row-major
/// (leftmost index varies slowest). Order 0 is a scalar.
class Tensor {
public:
    /// Zero tensor.
    explicit Tensor(std::vector<VectorSpace> spaces);
    /// Throws DimensionError if data.size() != product of dims.
    Tensor(std::vector<VectorSpace> spaces, std::vector<double> data);

    static Tensor scalar(double value) { return Tensor({}, {value}); }

    const std::vector<VectorSpace>& spaces() const noexcept { return spaces_; }
    std::vector<std::size_t> dims() const;
    std::size_t order() const noexcept { return spaces_.size(); }
    std::size_t size() const noexcept { return data_.size(); }

    std::span<const double> data() const noexcept { return data_; }
    std::span<double> data() noexcept { return data_; }

    std::vector<std::size_t> strides() const;
    std::size_t offset(std::span<const std::size_t> index) const;

    double at(std::span<const std::size_t> index) const { return data_[offset(index)]; }
    double& at(std::span<const std::size_t> index) { return data_[offset(index)]; }
    double at(std::initializer_list<std::size_t> index) const {
        return at(std::span<const std::size_t>(index.begin(), index.size()));
    }

    friend bool operator==(const Tensor&, const Tensor&) = default;

private:
    std::vector<VectorSpace> spaces_;
    std::vector<double> data_;
};

/// Standard basis vector e_i of `space`.
Tensor basis_vector(const VectorSpace& space, std::size_t i);

/// True iff same dims and every entry differs by at most `tol`.
bool approx_equal(const Tensor& a, const Tensor& b, double tol);

/// Which index pairs of a tensor to contract. Remaining indices keep their
/// original relative order.
class ContractionPlan {
public:
    /// Throws DimensionError for out-of-range or overlapping indices, or for
    /// a pair joining spaces of different dimension.
    ContractionPlan(std::vector<VectorSpace> input_spaces,
                    std::vector<std::pair<std::size_t, std::size_t>> pairs);

    const std::vector<VectorSpace>& input_spaces() const noexcept { return input_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const noexcept { return pairs_; }
    const std::vector<std::size_t>& output_indices() const noexcept { return output_; }
    std::vector<VectorSpace> output_spaces() const;

private:
    std::vector<VectorSpace> input_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<std::size_t> output_;
};

/// The unit state sum_i e_i (x) e_i in V (x) V.
Tensor make_eta(const VectorSpace& space);

/// The counit: sum_i t[i, i]. Throws DimensionError unless `t` is order 2
/// with equal dims.
double apply_epsilon(const Tensor& t);

Tensor tensor_product(const Tensor& a, const Tensor& b);

/// Sums each paired index pair over its shared range.
Tensor contract(const Tensor& t, const ContractionPlan& plan);

/// A linear map in the usual codomain x domain matrix form (row-major).
class LinearMap {
public:
    LinearMap(VectorSpace domain, VectorSpace codomain, std::vector<double> entries);

    static LinearMap identity(const VectorSpace& space);

    const VectorSpace& domain() const noexcept { return domain_; }
    const VectorSpace& codomain() const noexcept { return codomain_; }
    std::size_t rows() const noexcept { return codomain_.dim(); }
    std::size_t cols() const noexcept { return domain_.dim(); }
    double operator()(std::size_t row, std::size_t col) const { return entries_[row * cols() + col]; }
    std::span<const double> entries() const noexcept { return entries_; }

    Tensor apply(const Tensor& v) const;

    friend bool operator==(const LinearMap&, const LinearMap&) = default;

private:
    VectorSpace domain_;
    VectorSpace codomain_;
    std::vector<double> entries_;
};

/// A state t in V (x) W viewed as the map V -> W, v |-> sum_i v_i t[i, :].
/// Throws DimensionError unless `t` has order 2.
LinearMap state_to_process(const Tensor& t);
Tensor process_to_state(const LinearMap& f);

/// Builds both snake composites (eps (x) id) . (id (x) eta) and
/// (id (x) eps) . (eta (x) id) on a space of dimension `dim` as matrices,
/// and checks each against the identity entrywise within `tol`.
bool yanking_check(std::size_t dim, double tol = 0.0);

struct SnakeComposites {
    LinearMap rightward;
    LinearMap leftward;
};
SnakeComposites snake_composites(std::size_t dim);

} // namespace discocat
