#include "casimir/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

CurveRecord evaluate_point(const SweepRequest& req, double d, double t) {
    CurveRecord rec;
    rec.separation = d;
    rec.temperature = t;
    try {
        EnergyResult r;
        if (t > 0.0) {
            EngineOptions opt;
            opt.tol = req.tol;
            opt.threads = 1;
            opt.keep_breakdown = false;
            r = free_energy(PlanarScenario{req.halfspace, req.gap, d, t}, opt);
        } else {
            EngineOptions opt;
            opt.tol = req.tol;
            opt.keep_breakdown = false;
            r = free_energy_zero_temperature(
                PlanarScenario{req.halfspace, req.gap, d, t}, opt);
        }
        rec.value = r.value;
        rec.abs_error = r.abs_error;
        rec.n_terms = static_cast<std::size_t>(r.n_terms_used);
        rec.quad_evals = r.quad_evals;
    } catch (const ConvergenceError& e) {
        rec.value = e.partial_value;
        rec.abs_error = e.partial_error;
        rec.quad_evals = e.evaluations;
        rec.ok = false;
    } catch (const NumericsError&) {
        rec.ok = false;
    }
    return rec;
}

}  // namespace

std::vector<double> sweep_grid(const SweepSpec& spec) {
    if (spec.points < 2 || !(spec.from > 0.0) || !(spec.to > spec.from)) {
        throw InputError("sweep grid requires points >= 2 and 0 < from < to");
    }
    std::vector<double> grid(static_cast<std::size_t>(spec.points));
    const double n1 = static_cast<double>(spec.points - 1);
    if (spec.log_spacing) {
        const double la = std::log(spec.from);
        const double lb = std::log(spec.to);
        for (int i = 0; i < spec.points; ++i) {
            grid[static_cast<std::size_t>(i)] =
                std::exp(la + (lb - la) * static_cast<double>(i) / n1);
        }
    } else {
        for (int i = 0; i < spec.points; ++i) {
            grid[static_cast<std::size_t>(i)] =
                spec.from +
                (spec.to - spec.from) * static_cast<double>(i) / n1;
        }
    }
    return grid;
}

SweepResult run_sweep(const SweepRequest& req) {
    if (req.spec.variable != "d" && req.spec.variable != "T") {
        throw InputError("sweep variable must be 'd' or 'T'");
    }
    const bool sweep_d = req.spec.variable == "d";
    if (sweep_d && !(req.temperature >= 0.0)) {
        throw InputError("sweeping d requires a fixed temperature >= 0");
    }
    if (!sweep_d && !(req.separation > 0.0)) {
        throw InputError("sweeping T requires a fixed separation > 0");
    }
    const std::vector<double> grid = sweep_grid(req.spec);

    SweepResult out;
    out.records.resize(grid.size());

    const auto eval_into = [&](std::size_t i) {
        const double d = sweep_d ? grid[i] : req.separation;
        const double t = sweep_d ? req.temperature : grid[i];
        out.records[i] = evaluate_point(req, d, t);
    };

    const int workers = std::max(
        1, std::min(req.threads, static_cast<int>(grid.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            eval_into(i);
        }
    } else {
        // Each record slot is owned by whichever worker claims its index, so
        // results are positionally identical for any worker count.
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < grid.size();
                     i = next.fetch_add(1)) {
                    eval_into(i);
                }
            });
        }
        for (std::thread& th : pool) {
            th.join();
        }
    }
    for (const CurveRecord& rec : out.records) {
        out.all_ok = out.all_ok && rec.ok;
    }
    return out;
}

std::string format_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15e", v);
    return buf;
}

std::string render_sweep_csv(const SweepResult& result) {
    std::string s =
        "d[m],T[K],value[J/m^2],abs_error[J/m^2],n_terms,quad_evals,status\n";
    char tail[80];
    for (const CurveRecord& r : result.records) {
        s += format_sci(r.separation);
        s += ',';
        s += format_sci(r.temperature);
        s += ',';
        s += format_sci(r.value);
        s += ',';
        s += format_sci(r.abs_error);
        std::snprintf(tail, sizeof(tail), ",%zu,%zu,%s\n", r.n_terms,
                      r.quad_evals, r.ok ? "ok" : "failed");
        s += tail;
    }
    return s;
}

std::vector<ForceRecord> force_from_energy(
    const std::vector<CurveRecord>& curve) {
    const std::size_t n = curve.size();
    if (n < 3) {
        throw InputError("force_from_energy needs at least 3 points");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(curve[i].separation > curve[i - 1].separation)) {
            throw InputError(
                "force_from_energy needs strictly increasing separations");
        }
    }

    // Three-point first derivative on a non-uniform grid; weights reduce to
    // the familiar (-1/2, 0, 1/2)/h and (-3/2, 2, -1/2)/h forms when uniform.
    const auto x = [&](std::size_t i) { return curve[i].separation; };
    const auto f = [&](std::size_t i) { return curve[i].value; };
    const auto ferr = [&](std::size_t i) { return curve[i].abs_error; };

    std::vector<ForceRecord> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t a;
        double w0;
        double w1;
        double w2;
        if (i == 0) {
            a = 0;
            const double h1 = x(1) - x(0);
            const double h2 = x(2) - x(1);
            w0 = -(2.0 * h1 + h2) / (h1 * (h1 + h2));
            w1 = (h1 + h2) / (h1 * h2);
            w2 = -h1 / (h2 * (h1 + h2));
        } else if (i == n - 1) {
            a = n - 3;
            const double h1 = x(n - 2) - x(n - 3);
            const double h2 = x(n - 1) - x(n - 2);
            w0 = h2 / (h1 * (h1 + h2));
            w1 = -(h1 + h2) / (h1 * h2);
            w2 = (h1 + 2.0 * h2) / (h2 * (h1 + h2));
        } else {
            a = i - 1;
            const double h1 = x(i) - x(i - 1);
            const double h2 = x(i + 1) - x(i);
            w0 = -h2 / (h1 * (h1 + h2));
            w1 = (h2 - h1) / (h1 * h2);
            w2 = h1 / (h2 * (h1 + h2));
        }
        const double deriv = w0 * f(a) + w1 * f(a + 1) + w2 * f(a + 2);

        // Truncation estimate: distance to the nearest 2-point slope, which
        // is one order lower and so bounds the grid-spacing error from above.
        double trunc;
        if (i == 0) {
            trunc = std::abs(deriv - (f(1) - f(0)) / (x(1) - x(0)));
        } else if (i == n - 1) {
            trunc =
                std::abs(deriv - (f(n - 1) - f(n - 2)) / (x(n - 1) - x(n - 2)));
        } else {
            const double fwd = (f(i + 1) - f(i)) / (x(i + 1) - x(i));
            const double bwd = (f(i) - f(i - 1)) / (x(i) - x(i - 1));
            trunc = std::max(std::abs(deriv - fwd), std::abs(deriv - bwd));
        }
        const double data_err = std::abs(w0) * ferr(a) +
                                std::abs(w1) * ferr(a + 1) +
                                std::abs(w2) * ferr(a + 2);

        out[i].separation = x(i);
        out[i].pressure = -deriv;
        out[i].abs_error = trunc + data_err;
    }
    return out;
}

std::string render_force_csv(const std::vector<ForceRecord>& records) {
    std::string s = "d[m],pressure[J/m^3],abs_error[J/m^3]\n";
    for (const ForceRecord& r : records) {
        s += format_sci(r.separation);
        s += ',';
        s += format_sci(r.pressure);
        s += ',';
        s += format_sci(r.abs_error);
        s += '\n';
    }
    return s;
}

}  // namespace casimir
