#include "bestprox/f_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bestprox/error.hpp"

namespace bestprox {

namespace {

void check_exponent(double k) {
    if (!(k > 0.0 && k < 1.0)) throw Error(ErrorCode::InvalidArgument, "k exponent must lie in (0,1)");
}

void check_abscissae(const std::vector<FFunction::Sample>& table) {
    if (table.empty()) throw Error(ErrorCode::InvalidArgument, "custom F table is empty");
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (!(table[i].alpha > 0.0) || !std::isfinite(table[i].alpha) || !std::isfinite(table[i].value)) {
            throw Error(ErrorCode::InvalidArgument, "custom F table needs finite entries with alpha > 0");
        }
        if (i > 0 && !(table[i - 1].alpha < table[i].alpha)) {
            throw Error(ErrorCode::InvalidArgument, "custom F abscissae must be strictly increasing");
        }
    }
}

}  // namespace

FFunction FFunction::log() { return {FKind::Log, 0.5}; }
FFunction FFunction::log_plus_linear() { return {FKind::LogPlusLinear, 0.5}; }
// alpha^k * (-alpha^{-1/2}) = -alpha^{k-1/2} vanishes only for k > 1/2
FFunction FFunction::neg_inv_sqrt() { return {FKind::NegInvSqrt, 0.75}; }
FFunction FFunction::log_quadratic() { return {FKind::LogQuadratic, 0.5}; }

FFunction FFunction::custom_unchecked(std::vector<Sample> table, double k) {
    check_exponent(k);
    check_abscissae(table);
    FFunction f(FKind::CustomTable, k);
    f.table_ = std::move(table);
    return f;
}

FFunction FFunction::custom(std::vector<Sample> table, double k) {
    FFunction f = custom_unchecked(std::move(table), k);
    for (std::size_t i = 1; i < f.table_.size(); ++i) {
        if (!(f.table_[i - 1].value < f.table_[i].value)) {
            std::ostringstream os;
            os << "custom F is not strictly increasing between alpha=" << f.table_[i - 1].alpha
               << " and alpha=" << f.table_[i].alpha;
            throw Error(ErrorCode::InvalidArgument, os.str());
        }
    }
    return f;
}

FFunction FFunction::from_name(std::string_view name) {
    if (name == "f1") return log();
    if (name == "f2") return log_plus_linear();
    if (name == "f3") return neg_inv_sqrt();
    if (name == "f4") return log_quadratic();
    throw Error(ErrorCode::InvalidArgument, "unknown F '" + std::string(name) + "' (expected f1|f2|f3|f4)");
}

FFunction FFunction::with_exponent(double k) const {
    check_exponent(k);
    FFunction f = *this;
    f.k_ = k;
    return f;
}

std::string_view FFunction::name() const noexcept {
    switch (kind_) {
    case FKind::Log: return "f1";
    case FKind::LogPlusLinear: return "f2";
    case FKind::NegInvSqrt: return "f3";
    case FKind::LogQuadratic: return "f4";
    case FKind::CustomTable: return "custom";
    }
    return "custom";
}

double FFunction::operator()(double alpha) const {
    if (!(alpha > 0.0)) {
        std::ostringstream os;
        os << "F evaluated at non-positive argument " << alpha;
        throw Error(ErrorCode::NonPositiveArgument, os.str());
    }
    switch (kind_) {
    case FKind::Log: return std::log(alpha);
    case FKind::LogPlusLinear: return std::log(alpha) + alpha;
    case FKind::NegInvSqrt: return -1.0 / std::sqrt(alpha);
    case FKind::LogQuadratic: return std::log(alpha * alpha + alpha);
    case FKind::CustomTable: {
        auto it = std::lower_bound(table_.begin(), table_.end(), alpha,
                                   [](const Sample& s, double a) { return s.alpha < a; });
        if (it == table_.end() || it->alpha != alpha) {
            std::ostringstream os;
            os.precision(17);
            os << "custom F has no sample at alpha=" << alpha;
            throw Error(ErrorCode::UnsampledPoint, os.str());
        }
        return it->value;
    }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

F1Verdict validate_f1(const FFunction& f, std::span<const double> grid) {
    if (grid.size() < 2) throw Error(ErrorCode::InvalidArgument, "F1 grid needs at least two points");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0)) throw Error(ErrorCode::InvalidArgument, "F1 grid points must be positive");
        if (i > 0 && !(grid[i - 1] < grid[i])) throw Error(ErrorCode::InvalidArgument, "F1 grid must ascend");
    }
    double prev = f(grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double cur = f(grid[i]);
        if (!(prev < cur)) return {false, std::pair{grid[i - 1], grid[i]}};
        prev = cur;
    }
    return {true, std::nullopt};
}

ProbeRecord probe_f2_f3(const FFunction& f, std::span<const double> alphas, ProbeOptions options) {
    if (alphas.size() < 5) throw Error(ErrorCode::InvalidArgument, "probe needs at least five terms");
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (!(alphas[i] > 0.0)) throw Error(ErrorCode::InvalidArgument, "probe terms must be positive");
        if (i > 0 && !(alphas[i] < alphas[i - 1])) {
            throw Error(ErrorCode::InvalidArgument, "probe terms must strictly decrease");
        }
    }
    ProbeRecord rec;
    rec.alphas.assign(alphas.begin(), alphas.end());
    for (double a : alphas) {
        const double v = f(a);
        rec.values.push_back(v);
        rec.weighted.push_back(std::pow(a, f.k_exponent()) * v);
    }

    const std::size_t n = rec.values.size();
    rec.decreasing = true;
    for (std::size_t i = 1; i < n; ++i) rec.decreasing = rec.decreasing && rec.values[i] < rec.values[i - 1];

    // Project the tail: decrements shrinking geometrically by ratio r < 1 sum
    // to a finite limit; r >= 1 keeps descending past any floor.
    const double last_step = rec.values[n - 2] - rec.values[n - 1];
    const double prev_step = rec.values[n - 3] - rec.values[n - 2];
    if (rec.decreasing) {
        const double ratio = last_step / prev_step;
        rec.projected_limit = ratio >= 1.0 ? -std::numeric_limits<double>::infinity()
                                           : rec.values[n - 1] - last_step * ratio / (1.0 - ratio);
    } else {
        rec.projected_limit = rec.values[n - 1];
    }
    rec.unbounded = rec.decreasing &&
                    (rec.values[n - 1] <= options.floor || rec.projected_limit <= options.floor);

    rec.weighted_vanishing = std::abs(rec.weighted[n - 1]) < std::abs(rec.weighted[n - 2]) &&
                             std::abs(rec.weighted[n - 2]) < std::abs(rec.weighted[n - 3]);
    rec.consistent = rec.decreasing && rec.unbounded && rec.weighted_vanishing;
    return rec;
}

}  // namespace bestprox
