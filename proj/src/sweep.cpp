#include "cmm/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "cmm/covariance.hpp"
#include "cmm/errors.hpp"

namespace cmm {

std::vector<double> SweepAxis::values() const
{
    std::vector<double> out(points);
    const double last = static_cast<double>(points - 1);
    for (std::size_t k = 0; k < points; ++k) {
        const double t = static_cast<double>(k) / last;
        if (scale == AxisScale::linear) {
            out[k] = min + (max - min) * t;
        } else {
            out[k] = std::exp(std::log(min) + (std::log(max) - std::log(min)) * t);
        }
    }
    out.front() = min;
    out.back() = max;
    return out;
}

void SweepSpec::validate() const
{
    auto check = [](const SweepAxis& axis) {
        if (axis.parameter != kDeltaBMagnitude && find_param_field(axis.parameter) == nullptr) {
            throw ConfigError("unknown sweep parameter '" + axis.parameter + "'", axis.parameter);
        }
        if (axis.points < 2) throw ConfigError("sweep axis needs at least 2 points", axis.parameter);
        if (!(axis.min < axis.max)) throw ConfigError("sweep axis needs min < max", axis.parameter);
        if (axis.scale == AxisScale::log && !(axis.min > 0.0)) {
            throw ConfigError("log-scaled sweep axis needs a positive minimum", axis.parameter);
        }
    };
    check(axis1);
    if (axis2) {
        check(*axis2);
        if (axis2->parameter == axis1.parameter) throw ConfigError("sweep axes must differ", axis2->parameter);
    }
}

double contrast_ratio(double c_plus, double c_minus)
{
    if (c_plus < 0.0 || c_minus < 0.0) throw DomainError("contrast_ratio: coherences must be non-negative");
    const double sum = c_plus + c_minus;
    if (!(sum > 0.0)) throw DomainError("contrast_ratio: undefined for vanishing coherences");
    return std::abs(c_plus - c_minus) / sum;
}

PointRecord evaluate_point(const PhysicalParams& params)
{
    PointRecord record;
    record.params = params;
    record.steady = solve_steady(params);
    const LinearizedModel model = linearize(params, record.steady);
    record.stable = model.stable;
    record.spectral_abscissa = model.spectral_abscissa;
    if (!model.stable) {
        record.status = "unstable";
        return record;
    }
    CovarianceState half;
    half.V = solve_lyapunov(model.drift, model.diffusion);
    half.d = displacement(record.steady);
    record.coherence = coherence_report(to_unit_convention(half));
    record.status = "ok";
    return record;
}

namespace {

// Like evaluate_point, but a solver failure becomes an "error: ..." status.
PointRecord evaluate_point_recorded(const PhysicalParams& params)
{
    try {
        return evaluate_point(params);
    } catch (const Error& e) {
        PointRecord record;
        record.params = params;
        record.status = std::string("error: ") + e.what();
        return record;
    }
}

std::optional<double> contrast_if_defined(const PointRecord& plus, const PointRecord& minus,
                                          double CoherenceReport::*field)
{
    if (!plus.coherence || !minus.coherence) return std::nullopt;
    const double cp = (*plus.coherence).*field;
    const double cm = (*minus.coherence).*field;
    if (!(cp + cm > 0.0)) return std::nullopt;
    return contrast_ratio(cp, cm);
}

}  // namespace

PairRecord evaluate_pair(const PhysicalParams& params, double deltaB_magnitude)
{
    if (deltaB_magnitude < 0.0) throw DomainError("evaluate_pair: |delta_B| must be non-negative");
    PhysicalParams plus = params;
    PhysicalParams minus = params;
    plus.delta_B = deltaB_magnitude;
    minus.delta_B = -deltaB_magnitude;

    PairRecord pair;
    pair.plus = evaluate_point_recorded(plus);
    pair.minus = evaluate_point_recorded(minus);
    pair.I_a = contrast_if_defined(pair.plus, pair.minus, &CoherenceReport::C_a);
    pair.I_m = contrast_if_defined(pair.plus, pair.minus, &CoherenceReport::C_m);
    pair.I_b = contrast_if_defined(pair.plus, pair.minus, &CoherenceReport::C_b);
    pair.I_tot = contrast_if_defined(pair.plus, pair.minus, &CoherenceReport::C_tot);
    return pair;
}

PhysicalParams with_parameter(PhysicalParams params, std::string_view name, double value)
{
    if (name == kDeltaBMagnitude) {
        params.delta_B = value;
        return params;
    }
    const ParamField* field = find_param_field(name);
    if (field == nullptr) throw ConfigError("unknown parameter '" + std::string(name) + "'", std::string(name));
    params.*field->member = value;
    return params;
}

namespace {

// Runs body(k) for k in [0, count) on a small worker pool; rethrows the first failure.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body body)
{
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t k = 0; k < count; ++k) body(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < count; k = next++) {
                    try {
                        body(k);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, unsigned threads)
{
    spec.validate();
    const auto v1 = spec.axis1.values();
    const auto v2 = spec.axis2 ? spec.axis2->values() : std::vector<double>{};
    const std::size_t n2 = spec.axis2 ? v2.size() : 1;
    const std::size_t total = v1.size() * n2;

    auto params_at = [&](std::size_t i, std::size_t j) {
        PhysicalParams p = with_parameter(spec.base, spec.axis1.parameter, v1[i]);
        if (spec.axis2) p = with_parameter(p, spec.axis2->parameter, v2[j]);
        return p;
    };

    SweepResult result;
    if (spec.pair_barnett) {
        result.pairs.resize(total);
        parallel_for(total, threads, [&](std::size_t k) {
            const std::size_t i = k / n2, j = k % n2;
            const PhysicalParams p = params_at(i, j);
            PairRecord rec = evaluate_pair(p, std::abs(p.delta_B));
            rec.grid_i = rec.plus.grid_i = rec.minus.grid_i = i;
            rec.grid_j = rec.plus.grid_j = rec.minus.grid_j = j;
            result.pairs[k] = std::move(rec);
        });
    } else {
        result.points.resize(total);
        parallel_for(total, threads, [&](std::size_t k) {
            const std::size_t i = k / n2, j = k % n2;
            PointRecord rec = evaluate_point_recorded(params_at(i, j));
            rec.grid_i = i;
            rec.grid_j = j;
            result.points[k] = std::move(rec);
        });
    }
    return result;
}

}  // namespace cmm
