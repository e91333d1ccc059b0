#include "iet/induction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace iet {

namespace {

// Float lengths closer than this (relative) count as equal for the Keane test.
constexpr double kFloatEqualRelative = 4096 * std::numeric_limits<double>::epsilon();

template <Scalar S>
bool lengths_equal(const S& a, const S& b) {
    if constexpr (ScalarTraits<S>::exact) {
        return a == b;
    } else {
        return std::abs(a - b) <= kFloatEqualRelative * std::max(std::abs(a), std::abs(b));
    }
}

bool row_dominates(const IntegerMatrix& m, std::size_t i, std::size_t j) {
    bool strict = false;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m(i, c) < m(j, c)) return false;
        strict = strict || m(i, c) > m(j, c);
    }
    return strict;
}

bool col_dominates(const IntegerMatrix& m, std::size_t j, std::size_t i) {
    bool strict = false;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (m(r, j) < m(r, i)) return false;
        strict = strict || m(r, j) > m(r, i);
    }
    return strict;
}

IntegerMatrix elementary(std::size_t n, std::size_t i, std::size_t j) {
    IntegerMatrix e = IntegerMatrix::identity(n);
    e(i, j) = 1;
    return e;
}

}  // namespace

template <Scalar S>
RauzyStep<S> rauzy_step(const IntervalExchange<S>& spec) {
    const std::size_t n = spec.size();
    if (n < 2) fail(ErrorKind::InvalidArgument, "induction needs at least two intervals");
    if (spec.has_flips()) fail(ErrorKind::FlipUnsupported, "Rauzy induction is implemented for oriented exchanges only");
    const Permutation& pi = spec.permutation();
    if (!is_irreducible(pi)) fail(ErrorKind::Reducible, "permutation is reducible");

    const auto& lambda = spec.lengths();
    const std::size_t top = n - 1;                 // rightmost interval of the domain
    const std::size_t bottom = pi.preimage(n - 1);  // interval landing rightmost
    if (lengths_equal(lambda[top], lambda[bottom]))
        fail(ErrorKind::KeaneViolation, "rightmost lengths coincide: " + scalar_to_string(lambda[top]));

    std::vector<S> labeled = lambda;  // lengths indexed by old labels
    IntegerMatrix matrix;
    std::vector<std::size_t> new_index(n);  // old label -> new domain index
    std::vector<std::size_t> target(n);     // old label -> new target slot
    char tag;

    if (lambda[bottom] < lambda[top]) {
        // top move: the bottom row places `bottom` right after `top`
        tag = 'a';
        labeled[top] -= lambda[bottom];
        std::vector<std::size_t> bottom_row;
        for (std::size_t j = 0; j < n; ++j)
            if (pi.preimage(j) != bottom) bottom_row.push_back(pi.preimage(j));
        auto it = std::find(bottom_row.begin(), bottom_row.end(), top);
        bottom_row.insert(it + 1, bottom);
        for (std::size_t j = 0; j < n; ++j) target[bottom_row[j]] = j;
        for (std::size_t l = 0; l < n; ++l) new_index[l] = l;
        matrix = elementary(n, top, bottom);
    } else {
        // bottom move: the top row places `top` right after `bottom`
        tag = 'b';
        labeled[bottom] -= lambda[top];
        std::vector<std::size_t> top_row;
        for (std::size_t l = 0; l + 1 < n; ++l) top_row.push_back(l);
        top_row.insert(top_row.begin() + static_cast<std::ptrdiff_t>(bottom) + 1, top);
        for (std::size_t p = 0; p < n; ++p) new_index[top_row[p]] = p;
        for (std::size_t l = 0; l < n; ++l) target[l] = pi(l);
        // old = (I + E_{bottom,top}) μ and μ_l = ν_{new_index(l)}
        IntegerMatrix relabel(n, n);
        for (std::size_t l = 0; l < n; ++l) relabel(l, new_index[l]) = 1;
        matrix = elementary(n, bottom, top) * relabel;
    }

    S total(0);
    for (const S& l : labeled) total += l;
    std::vector<S> lengths(n);
    std::vector<std::size_t> images(n);
    for (std::size_t l = 0; l < n; ++l) {
        lengths[new_index[l]] = labeled[l] / total;
        images[new_index[l]] = target[l];
    }
    if constexpr (!ScalarTraits<S>::exact) {
        // absorb renormalization rounding so the sum check stays tight over long runs
        double s = 0.0;
        for (double l : lengths) s += l;
        for (double& l : lengths) l /= s;
    }
    return {IntervalExchange<S>::validate(std::move(lengths), Permutation(std::move(images))), std::move(matrix), tag};
}

template <Scalar S>
InductionRun<S> induce(const IntervalExchange<S>& spec, std::size_t steps) {
    InductionRun<S> run{{}, spec, std::nullopt};
    for (std::size_t k = 0; k < steps; ++k) {
        try {
            RauzyStep<S> step = rauzy_step(run.last);
            run.sequence.push_back(std::move(step.matrix), std::string(1, step.tag));
            run.last = std::move(step.induced);
        } catch (const Error& e) {
            run.failure = InductionFailure{e.kind(), k, std::string("step ") + std::to_string(k) + ": " + e.what()};
            break;
        }
    }
    return run;
}

MatrixSequence telescope(const MatrixSequence& seq, std::span<const std::size_t> cut_points) {
    const std::size_t len = seq.size();
    std::size_t prev = 0;
    for (std::size_t c : cut_points) {
        if (c <= prev || c >= len)
            fail(ErrorKind::BadCutPoints, "cut point " + std::to_string(c) + " must be increasing and inside (0, " +
                                              std::to_string(len) + ")");
        prev = c;
    }
    if (len == 0) return seq;
    MatrixSequence out;
    std::size_t begin = 0;
    auto emit = [&](std::size_t end) {
        std::string tag;
        for (std::size_t k = begin; k < end; ++k) tag += seq.tags.size() == len ? seq.tags[k] : std::string();
        out.push_back(product(seq.matrices, begin, end), std::move(tag));
        begin = end;
    };
    for (std::size_t c : cut_points) emit(c);
    emit(len);
    return out;
}

std::vector<IntegerMatrix> zero_one_factorization(const IntegerMatrix& m) {
    if (!m.is_square()) fail(ErrorKind::InvalidArgument, "multiplicity matrices are square");
    if (!m.is_nonnegative()) fail(ErrorKind::InvalidArgument, "multiplicity matrix has a negative entry");
    if (m.has_zero_line()) fail(ErrorKind::ZeroLine, "matrix " + m.to_string() + " has an all-zero row or column");

    const std::size_t n = m.rows();
    std::vector<IntegerMatrix> left;
    std::vector<IntegerMatrix> right;
    IntegerMatrix rest = m;

    while (!rest.is_zero_one()) {
        bool progressed = false;
        // rest = (I + E_ij) rest' with row_i' = row_i − row_j
        for (std::size_t i = 0; i < n && !progressed; ++i) {
            for (std::size_t j = 0; j < n && !progressed; ++j) {
                if (i == j || !row_dominates(rest, i, j)) continue;
                for (std::size_t c = 0; c < n; ++c) rest(i, c) -= rest(j, c);
                left.push_back(elementary(n, i, j));
                progressed = true;
            }
        }
        // rest = rest' (I + E_ij) with col_j' = col_j − col_i
        for (std::size_t i = 0; i < n && !progressed; ++i) {
            for (std::size_t j = 0; j < n && !progressed; ++j) {
                if (i == j || !col_dominates(rest, j, i)) continue;
                for (std::size_t r = 0; r < n; ++r) rest(r, j) -= rest(r, i);
                right.push_back(elementary(n, i, j));
                progressed = true;
            }
        }
        if (progressed) continue;

        // stalled: route each unit of multiplicity above one through its own vertex
        std::vector<std::pair<std::size_t, std::size_t>> extra;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (Integer k = 1; k < rest(i, j); ++k) extra.emplace_back(i, j);
        const std::size_t width = n + extra.size();
        IntegerMatrix a(n, width);
        IntegerMatrix b(width, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (rest(i, j) != 0) a(i, j) = 1;
        for (std::size_t j = 0; j < n; ++j) b(j, j) = 1;
        for (std::size_t v = 0; v < extra.size(); ++v) {
            a(extra[v].first, n + v) = 1;
            b(n + v, extra[v].second) = 1;
        }
        left.push_back(std::move(a));
        rest = std::move(b);
    }

    std::vector<IntegerMatrix> factors = std::move(left);
    factors.push_back(std::move(rest));
    factors.insert(factors.end(), std::make_move_iterator(right.rbegin()), std::make_move_iterator(right.rend()));
    return factors;
}

BratteliDiagram to_bratteli(const MatrixSequence& seq) {
    BratteliDiagram d;
    if (seq.empty()) return d;
    d.level_sizes.push_back(seq.dimension());
    for (const auto& m : seq.matrices) {
        const std::size_t first = d.incidences.size();
        for (auto& f : zero_one_factorization(m)) {
            d.level_sizes.push_back(f.cols());
            d.incidences.push_back(std::move(f));
        }
        d.blocks.emplace_back(first, d.incidences.size());
    }
    return d;
}

std::string BratteliDiagram::to_dot() const {
    std::ostringstream os;
    os << "digraph bratteli {\n  rankdir=TB;\n  node [shape=point];\n";
    for (std::size_t level = 0; level < level_sizes.size(); ++level) {
        os << "  { rank=same;";
        for (std::size_t v = 0; v < level_sizes[level]; ++v) os << " v" << level << '_' << v << ';';
        os << " }\n";
    }
    for (std::size_t k = 0; k < incidences.size(); ++k) {
        const auto& m = incidences[k];
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (m(i, j) != 0) os << "  v" << k << '_' << i << " -> v" << k + 1 << '_' << j << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::optional<StationarityWitness> detect_stationarity(const MatrixSequence& seq, std::size_t max_block,
                                                       std::size_t min_repeats) {
    if (max_block == 0 || min_repeats == 0) fail(ErrorKind::InvalidArgument, "max_block and min_repeats must be positive");
    const std::size_t len = seq.size();
    if (len < max_block * min_repeats)
        fail(ErrorKind::SequenceTooShort, "sequence of length " + std::to_string(len) + " is shorter than max_block*min_repeats = " +
                                              std::to_string(max_block * min_repeats));

    for (std::size_t block = 1; block <= max_block; ++block) {
        std::optional<StationarityWitness> best;
        for (std::size_t phase = 0; phase < block; ++phase) {
            const std::size_t count = (len - phase) / block;
            if (count < min_repeats) continue;
            std::vector<IntegerMatrix> products;
            products.reserve(count);
            for (std::size_t b = 0; b < count; ++b)
                products.push_back(product(seq.matrices, phase + b * block, phase + (b + 1) * block));
            // longest run of equal products ending at the last complete block
            std::size_t run = 1;
            while (run < count && products[count - 1 - run] == products[count - 1]) ++run;
            if (run < min_repeats) continue;
            const std::size_t start = phase + (count - run) * block;
            if (!best || start < best->start) best = StationarityWitness{start, block, products.back(), run};
        }
        if (best) return best;
    }
    return std::nullopt;
}

bool simplicity_check(const MatrixSequence& seq, std::size_t window) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
        Pattern p = pattern_of(seq.matrices[i]);
        for (std::size_t w = 1; w <= window && i + w <= seq.size(); ++w) {
            if (w > 1) p = pattern_product(p, pattern_of(seq.matrices[i + w - 1]));
            if (pattern_positive(p)) return true;
        }
    }
    return false;
}

template RauzyStep<double> rauzy_step(const IntervalExchange<double>&);
template RauzyStep<QuadraticNumber> rauzy_step(const IntervalExchange<QuadraticNumber>&);
template InductionRun<double> induce(const IntervalExchange<double>&, std::size_t);
template InductionRun<QuadraticNumber> induce(const IntervalExchange<QuadraticNumber>&, std::size_t);

}  // namespace iet
