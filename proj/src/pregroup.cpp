#include "discocat/pregroup.hpp"

#include "discocat/error.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace discocat {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

} // namespace

BasicType::BasicType(std::string name) : name_(std::move(name)) {
    if (name_.empty())
        throw ParseError("basic type name is empty", 0);
    if (!is_name_start(name_.front()))
        throw ParseError("basic type name must start with a letter: '" + name_ + "'", 0);
    for (std::size_t i = 1; i < name_.size(); ++i)
        if (!is_name_char(name_[i]))
            throw ParseError("invalid character in basic type name '" + name_ + "'", i);
}

SimpleType adjoint_of(const SimpleType& t, Side side) {
    return SimpleType{t.base, side == Side::left ? t.adjoint - 1 : t.adjoint + 1};
}

bool can_contract(const SimpleType& a, const SimpleType& b) {
    return a.base == b.base && b.adjoint == a.adjoint + 1;
}

CompoundType& CompoundType::operator+=(const CompoundType& other) {
    simples_.insert(simples_.end(), other.simples_.begin(), other.simples_.end());
    return *this;
}

CompoundType parse_type_expr(std::string_view text) {
    std::vector<SimpleType> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        if (is_space(text[i])) {
            ++i;
            continue;
        }
        if (!is_name_start(text[i]))
            throw ParseError(std::string("expected a type name, found '") + text[i] + "'", i);
        const std::size_t name_begin = i;
        while (i < n && is_name_char(text[i]))
            ++i;
        std::string name(text.substr(name_begin, i - name_begin));

        int adjoint = 0;
        if (i < n && text[i] == '^') {
            ++i;
            if (i >= n || is_space(text[i]))
                throw ParseError("dangling '^' without adjoint letters", i);
            while (i < n && !is_space(text[i])) {
                if (text[i] == 'l')
                    --adjoint;
                else if (text[i] == 'r')
                    ++adjoint;
                else
                    throw ParseError(std::string("bad adjoint letter '") + text[i] +
                                         "', expected 'l' or 'r'",
                                     i);
                ++i;
            }
        } else if (i < n && !is_space(text[i])) {
            throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
        }
        out.push_back(SimpleType{BasicType(std::move(name)), adjoint});
    }
    return CompoundType(std::move(out));
}

std::string to_string(const SimpleType& t) {
    std::string s = t.base.name();
    if (t.adjoint != 0) {
        s += '^';
        s.append(static_cast<std::size_t>(std::abs(t.adjoint)), t.adjoint > 0 ? 'r' : 'l');
    }
    return s;
}

std::string to_string(const CompoundType& t) {
    std::string s;
    for (const auto& simple : t) {
        if (!s.empty())
            s += ' ';
        s += to_string(simple);
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const SimpleType& t) { return os << to_string(t); }
std::ostream& operator<<(std::ostream& os, const CompoundType& t) { return os << to_string(t); }

// ---------------------------------------------------------------------------

ReductionDiagram::ReductionDiagram(CompoundType source, std::vector<Cup> cups)
    : source_(std::move(source)), cups_(std::move(cups)) {
    std::sort(cups_.begin(), cups_.end());
    const std::size_t n = source_.size();

    std::vector<bool> matched(n, false);
    for (const auto& c : cups_) {
        if (c.left >= c.right || c.right >= n)
            throw std::invalid_argument("cup out of range or not left < right");
        if (matched[c.left] || matched[c.right])
            throw std::invalid_argument("cups share a position");
        matched[c.left] = matched[c.right] = true;
        if (!can_contract(source_[c.left], source_[c.right]))
            throw std::invalid_argument("cup (" + std::to_string(c.left) + "," +
                                        std::to_string(c.right) + ") does not contract " +
                                        to_string(source_[c.left]) + " with " +
                                        to_string(source_[c.right]));
    }
    for (std::size_t a = 0; a < cups_.size(); ++a)
        for (std::size_t b = 0; b < cups_.size(); ++b) {
            const Cup& x = cups_[a];
            const Cup& y = cups_[b];
            if (x.left < y.left && y.left < x.right && x.right < y.right)
                throw std::invalid_argument("crossing cups");
        }
    for (const auto& c : cups_)
        for (std::size_t p = c.left + 1; p < c.right; ++p)
            if (!matched[p])
                throw std::invalid_argument("unmatched wire " + std::to_string(p) +
                                            " trapped under a cup");

    for (std::size_t p = 0; p < n; ++p)
        if (!matched[p])
            residual_positions_.push_back(p);
}

CompoundType ReductionDiagram::residual() const {
    std::vector<SimpleType> out;
    out.reserve(residual_positions_.size());
    for (auto p : residual_positions_)
        out.push_back(source_[p]);
    return CompoundType(std::move(out));
}

namespace {

// Interval feasibility tables shared by the search.
class ReductionSearch {
public:
    ReductionSearch(const CompoundType& source, const CompoundType& target)
        : s_(source), t_(target), n_(source.size()), m_(target.size()),
          full_((n_ + 1) * (n_ + 1), false), top_((n_ + 1) * (m_ + 1), false) {
        // full(i, j): [i, j) can be matched completely.
        for (std::size_t i = 0; i <= n_; ++i)
            full_at(i, i) = true;
        for (std::size_t len = 2; len <= n_; len += 2)
            for (std::size_t i = 0; i + len <= n_; ++i) {
                const std::size_t j = i + len;
                for (std::size_t k = i + 1; k < j; k += 2)
                    if (can_contract(s_[i], s_[k]) && full_at(i + 1, k) && full_at(k + 1, j)) {
                        full_at(i, j) = true;
                        break;
                    }
            }
        // top(p, t): suffix from p can leave exactly target[t..] unmatched.
        top_at(n_, m_) = true;
        for (std::size_t p = n_; p-- > 0;)
            for (std::size_t t = 0; t <= m_; ++t) {
                bool ok = t < m_ && s_[p] == t_[t] && top_at(p + 1, t + 1);
                for (std::size_t k = p + 1; !ok && k < n_; k += 2)
                    ok = can_contract(s_[p], s_[k]) && full_at(p + 1, k) && top_at(k + 1, t);
                top_at(p, t) = ok;
            }
    }

    std::vector<ReductionDiagram> run(std::size_t limit) {
        limit_ = limit;
        if (limit_ == 0 || !top_at(0, 0))
            return {};
        std::vector<Task> tasks{Task{Task::top, 0, 0}};
        step(tasks);
        return std::move(found_);
    }

private:
    // A pending obligation: either match [a, b) completely, or consume the
    // suffix from position a against target[b..].
    struct Task {
        enum Kind { complete, top } kind;
        std::size_t a;
        std::size_t b;
    };

    bool full_at(std::size_t i, std::size_t j) const { return full_[i * (n_ + 1) + j]; }
    std::vector<bool>::reference full_at(std::size_t i, std::size_t j) { return full_[i * (n_ + 1) + j]; }
    bool top_at(std::size_t p, std::size_t t) const { return top_[p * (m_ + 1) + t]; }
    std::vector<bool>::reference top_at(std::size_t p, std::size_t t) { return top_[p * (m_ + 1) + t]; }

    bool done() const { return found_.size() >= limit_; }

    // Tasks are a stack whose back is processed next. Choices are tried in
    // the order that yields lexicographically sorted cup lists.
    void step(std::vector<Task>& tasks) {
        if (done())
            return;
        if (tasks.empty()) {
            found_.emplace_back(s_, cups_);
            return;
        }
        const Task task = tasks.back();
        tasks.pop_back();

        if (task.kind == Task::complete && task.a == task.b) {
            step(tasks);
        } else if (task.kind == Task::top && task.a == n_) {
            step(tasks);
        } else {
            const std::size_t i = task.a;
            const std::size_t end = task.kind == Task::complete ? task.b : n_;
            for (std::size_t k = i + 1; k < end && !done(); k += 2) {
                if (!can_contract(s_[i], s_[k]) || !full_at(i + 1, k))
                    continue;
                if (task.kind == Task::complete ? !full_at(k + 1, end) : !top_at(k + 1, task.b))
                    continue;
                cups_.push_back(Cup{i, k});
                tasks.push_back(Task{task.kind, k + 1, task.b});
                tasks.push_back(Task{Task::complete, i + 1, k});
                step(tasks);
                tasks.pop_back();
                tasks.pop_back();
                cups_.pop_back();
            }
            if (task.kind == Task::top && !done()) {
                const std::size_t t = task.b;
                if (t < m_ && s_[i] == t_[t] && top_at(i + 1, t + 1)) {
                    tasks.push_back(Task{Task::top, i + 1, t + 1});
                    step(tasks);
                    tasks.pop_back();
                }
            }
        }
        tasks.push_back(task);
    }

    const CompoundType& s_;
    const CompoundType& t_;
    std::size_t n_;
    std::size_t m_;
    std::vector<bool> full_;
    std::vector<bool> top_;
    std::size_t limit_ = 0;
    std::vector<Cup> cups_;
    std::vector<ReductionDiagram> found_;
};

} // namespace

std::vector<ReductionDiagram> enumerate_reductions(const CompoundType& source,
                                                   const CompoundType& target,
                                                   std::size_t limit) {
    if (source.size() < target.size() || (source.size() - target.size()) % 2 != 0)
        return {};
    return ReductionSearch(source, target).run(limit);
}

CompoundType apply_contractions(const ReductionDiagram& d) {
    std::vector<Cup> order = d.cups();
    std::stable_sort(order.begin(), order.end(), [](const Cup& a, const Cup& b) {
        return a.right - a.left < b.right - b.left;
    });
    const auto& src = d.source();
    std::vector<bool> alive(src.size(), true);
    for (const auto& c : order) {
        for (std::size_t p = c.left + 1; p < c.right; ++p)
            if (alive[p])
                throw std::logic_error("cup endpoints are not adjacent after inner contractions");
        alive[c.left] = alive[c.right] = false;
    }
    std::vector<SimpleType> out;
    for (std::size_t p = 0; p < src.size(); ++p)
        if (alive[p])
            out.push_back(src[p]);
    return CompoundType(std::move(out));
}

std::string render_diagram(const ReductionDiagram& d) {
    const auto& src = d.source();
    std::string header;
    std::vector<std::size_t> column(src.size());
    for (std::size_t p = 0; p < src.size(); ++p) {
        if (p > 0)
            header += "  ";
        column[p] = header.size();
        header += to_string(src[p]);
    }

    // depth 0 = innermost; a cup sits one row below everything it encloses
    const auto& cups = d.cups();
    std::vector<std::size_t> depth(cups.size(), 0);
    std::vector<std::size_t> order(cups.size());
    for (std::size_t i = 0; i < cups.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return cups[a].right - cups[a].left < cups[b].right - cups[b].left;
    });
    std::size_t rows = 1;
    for (auto a : order) {
        for (auto b : order)
            if (cups[a].left < cups[b].left && cups[b].right < cups[a].right)
                depth[a] = std::max(depth[a], depth[b] + 1);
        rows = std::max(rows, depth[a] + 1);
    }

    std::ostringstream out;
    out << header << '\n';
    if (cups.empty() && src.empty())
        return out.str();
    for (std::size_t r = 0; r < rows; ++r) {
        std::string line(header.size(), ' ');
        for (auto p : d.residual_positions())
            line[column[p]] = '|';
        for (std::size_t c = 0; c < cups.size(); ++c) {
            const std::size_t l = column[cups[c].left];
            const std::size_t rr = column[cups[c].right];
            if (depth[c] > r) {
                line[l] = line[rr] = '|';
            } else if (depth[c] == r) {
                for (std::size_t x = l + 1; x < rr; ++x)
                    if (line[x] == ' ')
                        line[x] = '-';
                line[l] = line[rr] = '+';
            }
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

} // namespace discocat
