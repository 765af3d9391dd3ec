#include "discocat/linalg.hpp"

#include "discocat/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace discocat {

VectorSpace::VectorSpace(std::string label, std::size_t dim,
                         std::optional<std::vector<std::string>> basis_labels)
    : label_(std::move(label)), dim_(dim), basis_(std::move(basis_labels)) {
    if (dim_ == 0)
        throw DimensionError("space '" + label_ + "' must have dimension >= 1");
    if (basis_) {
        if (basis_->size() != dim_)
            throw DimensionError("space '" + label_ + "' has " + std::to_string(basis_->size()) +
                                 " basis labels for dimension " + std::to_string(dim_));
        std::set<std::string> seen(basis_->begin(), basis_->end());
        if (seen.size() != basis_->size())
            throw DimensionError("space '" + label_ + "' has duplicate basis labels");
    }
}

namespace {

std::size_t volume(const std::vector<VectorSpace>& spaces) {
    std::size_t n = 1;
    for (const auto& s : spaces)
        n *= s.dim();
    return n;
}

} // namespace

Tensor::Tensor(std::vector<VectorSpace> spaces)
    : spaces_(std::move(spaces)), data_(volume(spaces_), 0.0) {}

Tensor::Tensor(std::vector<VectorSpace> spaces, std::vector<double> data)
    : spaces_(std::move(spaces)), data_(std::move(data)) {
    if (data_.size() != volume(spaces_))
        throw DimensionError("tensor data has " + std::to_string(data_.size()) +
                             " entries, dims require " + std::to_string(volume(spaces_)));
}

std::vector<std::size_t> Tensor::dims() const {
    std::vector<std::size_t> d;
    d.reserve(spaces_.size());
    for (const auto& s : spaces_)
        d.push_back(s.dim());
    return d;
}

std::vector<std::size_t> Tensor::strides() const {
    std::vector<std::size_t> st(spaces_.size(), 1);
    for (std::size_t k = spaces_.size(); k-- > 1;)
        st[k - 1] = st[k] * spaces_[k].dim();
    return st;
}

std::size_t Tensor::offset(std::span<const std::size_t> index) const {
    if (index.size() != spaces_.size())
        throw DimensionError("index has " + std::to_string(index.size()) + " components, tensor has order " +
                             std::to_string(spaces_.size()));
    std::size_t off = 0;
    for (std::size_t k = 0; k < index.size(); ++k) {
        if (index[k] >= spaces_[k].dim())
            throw DimensionError("index component " + std::to_string(k) + " out of range");
        off = off * spaces_[k].dim() + index[k];
    }
    return off;
}

Tensor basis_vector(const VectorSpace& space, std::size_t i) {
    Tensor t({space});
    if (i >= space.dim())
        throw DimensionError("basis index out of range for space '" + space.label() + "'");
    t.data()[i] = 1.0;
    return t;
}

bool approx_equal(const Tensor& a, const Tensor& b, double tol) {
    if (a.dims() != b.dims())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(std::abs(a.data()[i] - b.data()[i]) <= tol))
            return false;
    return true;
}

ContractionPlan::ContractionPlan(std::vector<VectorSpace> input_spaces,
                                 std::vector<std::pair<std::size_t, std::size_t>> pairs)
    : input_(std::move(input_spaces)), pairs_(std::move(pairs)) {
    std::vector<bool> used(input_.size(), false);
    for (const auto& [i, j] : pairs_) {
        if (i >= input_.size() || j >= input_.size())
            throw DimensionError("contraction index out of range");
        if (i == j || used[i] || used[j])
            throw DimensionError("contraction pairs overlap");
        if (input_[i].dim() != input_[j].dim())
            throw DimensionError("cannot contract '" + input_[i].label() + "' (dim " +
                                 std::to_string(input_[i].dim()) + ") with '" + input_[j].label() +
                                 "' (dim " + std::to_string(input_[j].dim()) + ")");
        used[i] = used[j] = true;
    }
    for (std::size_t k = 0; k < input_.size(); ++k)
        if (!used[k])
            output_.push_back(k);
}

std::vector<VectorSpace> ContractionPlan::output_spaces() const {
    std::vector<VectorSpace> out;
    for (auto k : output_)
        out.push_back(input_[k]);
    return out;
}

Tensor make_eta(const VectorSpace& space) {
    Tensor t({space, space});
    const std::size_t d = space.dim();
    for (std::size_t i = 0; i < d; ++i)
        t.data()[i * d + i] = 1.0;
    return t;
}

double apply_epsilon(const Tensor& t) {
    if (t.order() != 2 || t.spaces()[0].dim() != t.spaces()[1].dim())
        throw DimensionError("counit needs an order-2 tensor with equal dimensions");
    const std::size_t d = t.spaces()[0].dim();
    double sum = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        sum += t.data()[i * d + i];
    return sum;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
    std::vector<VectorSpace> spaces = a.spaces();
    spaces.insert(spaces.end(), b.spaces().begin(), b.spaces().end());
    std::vector<double> data;
    data.reserve(a.size() * b.size());
    for (double x : a.data())
        for (double y : b.data())
            data.push_back(x * y);
    return Tensor(std::move(spaces), std::move(data));
}

Tensor contract(const Tensor& t, const ContractionPlan& plan) {
    const auto& in = plan.input_spaces();
    if (in.size() != t.order())
        throw DimensionError("plan expects order " + std::to_string(in.size()) + ", tensor has order " +
                             std::to_string(t.order()));
    for (std::size_t k = 0; k < in.size(); ++k)
        if (in[k].dim() != t.spaces()[k].dim())
            throw DimensionError("plan index " + std::to_string(k) + " has dim " + std::to_string(in[k].dim()) +
                                 ", tensor has " + std::to_string(t.spaces()[k].dim()));

    const auto strides = t.strides();
    const auto& out_idx = plan.output_indices();
    std::vector<VectorSpace> out_spaces;
    for (auto k : out_idx)
        out_spaces.push_back(t.spaces()[k]);
    Tensor result(std::move(out_spaces));

    std::vector<std::size_t> pair_dim;
    std::vector<std::size_t> pair_stride;
    for (const auto& [i, j] : plan.pairs()) {
        pair_dim.push_back(t.spaces()[i].dim());
        pair_stride.push_back(strides[i] + strides[j]);
    }

    std::vector<std::size_t> out_counter(out_idx.size(), 0);
    std::vector<std::size_t> pair_counter(pair_dim.size(), 0);
    const auto src = t.data();
    for (auto& dst : result.data()) {
        std::size_t base = 0;
        for (std::size_t k = 0; k < out_idx.size(); ++k)
            base += out_counter[k] * strides[out_idx[k]];

        double sum = 0.0;
        std::fill(pair_counter.begin(), pair_counter.end(), 0);
        for (;;) {
            std::size_t off = base;
            for (std::size_t p = 0; p < pair_counter.size(); ++p)
                off += pair_counter[p] * pair_stride[p];
            sum += src[off];
            std::size_t p = pair_counter.size();
            while (p > 0 && ++pair_counter[p - 1] == pair_dim[p - 1])
                pair_counter[--p] = 0;
            if (p == 0)
                break;
        }
        dst = sum;

        std::size_t k = out_counter.size();
        while (k > 0 && ++out_counter[k - 1] == result.spaces()[k - 1].dim())
            out_counter[--k] = 0;
    }
    return result;
}

LinearMap::LinearMap(VectorSpace domain, VectorSpace codomain, std::vector<double> entries)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), entries_(std::move(entries)) {
    if (entries_.size() != domain_.dim() * codomain_.dim())
        throw DimensionError("linear map needs " + std::to_string(domain_.dim() * codomain_.dim()) +
                             " entries, got " + std::to_string(entries_.size()));
}

LinearMap LinearMap::identity(const VectorSpace& space) {
    std::vector<double> e(space.dim() * space.dim(), 0.0);
    for (std::size_t i = 0; i < space.dim(); ++i)
        e[i * space.dim() + i] = 1.0;
    return LinearMap(space, space, std::move(e));
}

Tensor LinearMap::apply(const Tensor& v) const {
    if (v.order() != 1 || v.spaces()[0].dim() != cols())
        throw DimensionError("linear map applied to a tensor of the wrong shape");
    Tensor out({codomain_});
    for (std::size_t r = 0; r < rows(); ++r) {
        double sum = 0.0;
        for (std::size_t c = 0; c < cols(); ++c)
            sum += (*this)(r, c) * v.data()[c];
        out.data()[r] = sum;
    }
    return out;
}

LinearMap state_to_process(const Tensor& t) {
    if (t.order() != 2)
        throw DimensionError("state-to-process needs an order-2 tensor, got order " +
                             std::to_string(t.order()));
    const auto& v = t.spaces()[0];
    const auto& w = t.spaces()[1];
    std::vector<double> m(v.dim() * w.dim());
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j)
            m[j * v.dim() + i] = t.data()[i * w.dim() + j];
    return LinearMap(v, w, std::move(m));
}

Tensor process_to_state(const LinearMap& f) {
    Tensor t({f.domain(), f.codomain()});
    for (std::size_t i = 0; i < f.cols(); ++i)
        for (std::size_t j = 0; j < f.rows(); ++j)
            t.data()[i * f.rows() + j] = f(j, i);
    return t;
}

SnakeComposites snake_composites(std::size_t dim) {
    const VectorSpace v("V", dim);
    const Tensor eta = make_eta(v);
    std::vector<double> right(dim * dim);
    std::vector<double> left(dim * dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const Tensor ek = basis_vector(v, k);
        // (eps (x) id) . (id (x) eta): the input wire meets eta's first leg.
        const Tensor r = contract(tensor_product(ek, eta), ContractionPlan({v, v, v}, {{0, 1}}));
        // (id (x) eps) . (eta (x) id): eta's second leg meets the input.
        const Tensor l = contract(tensor_product(eta, ek), ContractionPlan({v, v, v}, {{1, 2}}));
        for (std::size_t row = 0; row < dim; ++row) {
            right[row * dim + k] = r.data()[row];
            left[row * dim + k] = l.data()[row];
        }
    }
    return {LinearMap(v, v, std::move(right)), LinearMap(v, v, std::move(left))};
}

bool yanking_check(std::size_t dim, double tol) {
    if (dim == 0)
        throw DimensionError("yanking check needs dim >= 1");
    const auto [rightward, leftward] = snake_composites(dim);
    const auto id = LinearMap::identity(rightward.domain());
    for (std::size_t i = 0; i < dim * dim; ++i) {
        if (!(std::abs(rightward.entries()[i] - id.entries()[i]) <= tol))
            return false;
        if (!(std::abs(leftward.entries()[i] - id.entries()[i]) <= tol))
            return false;
    }
    return true;
}

} // namespace discocat
