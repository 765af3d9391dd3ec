#pragma once

#include "discocat/linalg.hpp"
#include "discocat/pregroup.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace discocat {

/// The object part of the grammar-to-meaning functor: each basic type gets a
/// space, and every adjoint of a basic type is sent to the same space.
class FunctorAssignment {
public:
    FunctorAssignment() = default;

    void assign(const BasicType& base, VectorSpace space);
    bool has(const BasicType& base) const { return spaces_.contains(base.name()); }

    /// Throws UnassignedTypeError.
    const VectorSpace& space_of(const BasicType& base) const;

    const std::map<std::string, VectorSpace>& spaces() const noexcept { return spaces_; }

    friend bool operator==(const FunctorAssignment&, const FunctorAssignment&) = default;

private:
    std::map<std::string, VectorSpace> spaces_;
};

/// F(b^z) = F(b) for all z.
const VectorSpace& assign_space(const FunctorAssignment& f, const SimpleType& t);

/// F(t_1 ... t_k) = F(t_1) (x) ... (x) F(t_k), as the list of factors.
std::vector<VectorSpace> assign_spaces(const FunctorAssignment& f, const CompoundType& t);

/// Each cup becomes a counit on the corresponding pair of tensor indices;
/// residual wires become identities.
ContractionPlan lift_reduction(const FunctorAssignment& f, const ReductionDiagram& d);

/// For every (a, b): F(a b) is F(a) followed by F(b).
bool check_strong_monoidal(const FunctorAssignment& f,
                           const std::vector<std::pair<CompoundType, CompoundType>>& samples);

struct LexiconEntry {
    std::string word;
    CompoundType gtype;
    Tensor state;

    friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

/// The copula state: delta between the first and last wire, constant across
/// any wires in between. For `n^r s n^l` with a 1-dimensional S this is the
/// identity matrix. Throws DimensionError if the type has fewer than two
/// simples or the outer wires differ in dimension.
Tensor identity_verb(const FunctorAssignment& f, const CompoundType& gtype);

struct PrellerWitness {
    std::size_t dim = 0;
    /// The lifted composite (1 (x) eta) . (eps (x) 1) on A (x) A (x) A.
    LinearMap map;
    bool is_identity = false;
    /// Basis indices (0-based) of a nonzero input sent to zero; set when dim >= 2.
    std::optional<std::array<std::size_t, 3>> zero_witness;
};

/// Lifts the snake composite on `a a^r a` to a space of dimension `dim` and
/// reports whether it is the identity. For dim >= 2 it kills e1 (x) e2 (x) e1.
PrellerWitness preller_obstruction(std::size_t dim);

} // namespace discocat
