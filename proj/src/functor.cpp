#include "discocat/functor.hpp"

#include "discocat/error.hpp"

namespace discocat {

void FunctorAssignment::assign(const BasicType& base, VectorSpace space) {
    spaces_.insert_or_assign(base.name(), std::move(space));
}

const VectorSpace& FunctorAssignment::space_of(const BasicType& base) const {
    auto it = spaces_.find(base.name());
    if (it == spaces_.end())
        throw UnassignedTypeError("basic type '" + base.name() + "' has no assigned space");
    return it->second;
}

const VectorSpace& assign_space(const FunctorAssignment& f, const SimpleType& t) {
    return f.space_of(t.base);
}

std::vector<VectorSpace> assign_spaces(const FunctorAssignment& f, const CompoundType& t) {
    std::vector<VectorSpace> out;
    out.reserve(t.size());
    for (const auto& simple : t)
        out.push_back(assign_space(f, simple));
    return out;
}

ContractionPlan lift_reduction(const FunctorAssignment& f, const ReductionDiagram& d) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(d.cups().size());
    for (const auto& c : d.cups())
        pairs.emplace_back(c.left, c.right);
    return ContractionPlan(assign_spaces(f, d.source()), std::move(pairs));
}

bool check_strong_monoidal(const FunctorAssignment& f,
                           const std::vector<std::pair<CompoundType, CompoundType>>& samples) {
    for (const auto& [a, b] : samples) {
        auto joined = assign_spaces(f, a);
        const auto right = assign_spaces(f, b);
        joined.insert(joined.end(), right.begin(), right.end());
        if (assign_spaces(f, a + b) != joined)
            return false;
    }
    return true;
}

Tensor identity_verb(const FunctorAssignment& f, const CompoundType& gtype) {
    if (gtype.size() < 2)
        throw DimensionError("identity verb needs a type with at least two simples, got '" +
                             to_string(gtype) + "'");
    Tensor t(assign_spaces(f, gtype));
    const auto dims = t.dims();
    const std::size_t d = dims.front();
    if (dims.back() != d)
        throw DimensionError("identity verb needs equal outer dimensions for '" + to_string(gtype) + "'");
    std::size_t middle = 1;
    for (std::size_t k = 1; k + 1 < dims.size(); ++k)
        middle *= dims[k];
    // row-major: offset = (i * middle + m) * d + j
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t m = 0; m < middle; ++m)
            t.data()[(i * middle + m) * d + i] = 1.0;
    return t;
}

PrellerWitness preller_obstruction(std::size_t dim) {
    if (dim == 0)
        throw DimensionError("preller obstruction needs dim >= 1");
    const VectorSpace a("A", dim);
    const Tensor eta = make_eta(a);
    // input x (x) y (x) z, then eta: indices [x y z p q]; eps joins x and y.
    const ContractionPlan plan({a, a, a, a, a}, {{0, 1}});

    const std::size_t n = dim * dim * dim;
    std::vector<double> entries(n * n, 0.0);
    for (std::size_t col = 0; col < n; ++col) {
        Tensor input({a, a, a});
        input.data()[col] = 1.0;
        const Tensor image = contract(tensor_product(input, eta), plan);
        for (std::size_t row = 0; row < n; ++row)
            entries[row * n + col] = image.data()[row];
    }
    const VectorSpace cube("A(x)A(x)A", n);
    LinearMap map(cube, cube, std::move(entries));

    PrellerWitness w{dim, map, map == LinearMap::identity(cube), std::nullopt};
    if (dim >= 2) {
        const std::size_t col = (0 * dim + 1) * dim + 0;
        bool zero = true;
        for (std::size_t row = 0; row < n; ++row)
            zero = zero && map(row, col) == 0.0;
        if (zero)
            w.zero_witness = std::array<std::size_t, 3>{0, 1, 0};
    }
    return w;
}

} // namespace discocat
