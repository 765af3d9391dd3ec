#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace discocat {

// Free pregroup types ------------------------------------------------------

/// A basic grammar type such as `n` (noun) or `s` (sentence).
class BasicType {
public:
    /// Throws ParseError if `name` is not `[A-Za-z][A-Za-z0-9]*`.
    explicit BasicType(std::string name);

    const std::string& name() const noexcept { return name_; }

    friend auto operator<=>(const BasicType&, const BasicType&) = default;

private:
    std::string name_;
};

enum class Side { left, right };

/// A basic type with an adjoint exponent: 0 is plain, -1 is `^l`, +1 is `^r`,
/// and larger magnitudes are iterated duals.
struct SimpleType {
    BasicType base;
    int adjoint = 0;

    friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

/// Left dual lowers the exponent, right dual raises it.
SimpleType adjoint_of(const SimpleType& t, Side side);

/// True iff `a b` is a counit redex: `p^l p -> 1` or `p p^r -> 1`.
bool can_contract(const SimpleType& a, const SimpleType& b);

/// An element of the free pregroup. The empty sequence is the unit.
class CompoundType {
public:
    CompoundType() = default;
    explicit CompoundType(std::vector<SimpleType> simples) : simples_(std::move(simples)) {}
    CompoundType(std::initializer_list<SimpleType> simples) : simples_(simples) {}

    const std::vector<SimpleType>& simples() const noexcept { return simples_; }
    std::size_t size() const noexcept { return simples_.size(); }
    bool empty() const noexcept { return simples_.empty(); }
    const SimpleType& operator[](std::size_t i) const { return simples_[i]; }

    auto begin() const noexcept { return simples_.begin(); }
    auto end() const noexcept { return simples_.end(); }

    CompoundType& operator+=(const CompoundType& other);
    friend CompoundType operator+(CompoundType a, const CompoundType& b) { return a += b; }

    friend auto operator<=>(const CompoundType&, const CompoundType&) = default;

private:
    std::vector<SimpleType> simples_;
};

/// Parses `n n^r s n^ll` style expressions. Empty or all-whitespace text is
/// the unit. Throws ParseError carrying the offending offset.
CompoundType parse_type_expr(std::string_view text);

std::string to_string(const SimpleType& t);
std::string to_string(const CompoundType& t);
std::ostream& operator<<(std::ostream& os, const SimpleType& t);
std::ostream& operator<<(std::ostream& os, const CompoundType& t);

// Reductions ---------------------------------------------------------------

/// A single counit application between positions `left < right`.
struct Cup {
    std::size_t left = 0;
    std::size_t right = 0;

    friend auto operator<=>(const Cup&, const Cup&) = default;
};

/// A planar set of cups on a source type. Every cup contracts, no two cups
/// cross, and no unmatched wire sits under a cup.
class ReductionDiagram {
public:
    /// Validates all invariants and throws std::invalid_argument on failure.
    /// Cups are stored sorted by (left, right).
    ReductionDiagram(CompoundType source, std::vector<Cup> cups);

    const CompoundType& source() const noexcept { return source_; }
    const std::vector<Cup>& cups() const noexcept { return cups_; }

    /// Unmatched source positions, in order.
    const std::vector<std::size_t>& residual_positions() const noexcept { return residual_positions_; }
    CompoundType residual() const;

    friend bool operator==(const ReductionDiagram& a, const ReductionDiagram& b) {
        return a.source_ == b.source_ && a.cups_ == b.cups_;
    }

private:
    CompoundType source_;
    std::vector<Cup> cups_;
    std::vector<std::size_t> residual_positions_;
};

inline CompoundType residual_of(const ReductionDiagram& d) { return d.residual(); }

/// All diagrams reducing `source` to `target`, at most `limit` of them, in
/// lexicographic order of their sorted cup lists. Empty if none exist.
std::vector<ReductionDiagram> enumerate_reductions(const CompoundType& source,
                                                   const CompoundType& target,
                                                   std::size_t limit = static_cast<std::size_t>(-1));

/// Applies the cups of `d` innermost first, each time deleting an adjacent
/// pair from the working string. Returns what is left.
CompoundType apply_contractions(const ReductionDiagram& d);

/// ASCII rendering: the type on one line, then one row per nesting level
/// with `+---+` cups and `|` through-wires.
std::string render_diagram(const ReductionDiagram& d);

} // namespace discocat
