#include <string>

#include "cmm/errors.hpp"
#include "cmm/sweep.hpp"

namespace cmm {

namespace {

SweepAxis axis(std::string parameter, double min, double max, std::size_t points, AxisScale scale)
{
    return {std::move(parameter), min, max, points, scale};
}

FigurePreset fig2()
{
    PhysicalParams base = PhysicalParams::baseline();
    const double wb = base.omega_b;
    SweepSpec spec;
    spec.name = "fig2";
    spec.base = base;
    spec.axis1 = axis("P", 1e-8, 1e-5, 31, AxisScale::log);
    spec.axis2 = axis("delta_B", -0.1 * wb, 0.1 * wb, 3, AxisScale::linear);
    return {"fig2",
            {spec},
            {"|delta_B| = 0.1 omega_b is an artifact choice",
             "delta_B axis yields the three curves delta_B < 0, = 0, > 0"}};
}

PhysicalParams fig3_base()
{
    PhysicalParams base = PhysicalParams::baseline();
    base.P = 6e-7;
    base.delta_m_eff = 0.3 * base.omega_b;
    return base;
}

FigurePreset fig3()
{
    SweepSpec spec;
    spec.name = "fig3";
    spec.base = fig3_base();
    const double wb = spec.base.omega_b;
    spec.axis1 = axis(std::string(kDeltaBMagnitude), 0.0, 0.5 * wb, 26, AxisScale::linear);
    spec.axis2 = axis("J", 0.0, 0.6 * wb, 31, AxisScale::linear);
    spec.pair_barnett = true;
    return {"fig3",
            {spec},
            {"map ranges delta_B in [-0.5, 0.5] omega_b and J in [0, 0.6] omega_b are artifact choices",
             "each row holds the mirrored pair +|delta_B| / -|delta_B|"}};
}

PhysicalParams fig4_base()
{
    PhysicalParams base = fig3_base();
    base.P = 1e-8;
    base.delta_B = 0.2 * base.omega_b;
    return base;
}

FigurePreset fig4()
{
    SweepSpec spec;
    spec.name = "fig4";
    spec.base = fig4_base();
    const double wb = spec.base.omega_b;
    spec.axis1 = axis("J", 0.005 * wb, 0.8 * wb, 160, AxisScale::linear);
    spec.pair_barnett = true;
    return {"fig4",
            {spec},
            {"J axis extends past 0.4 omega_b to cover the reciprocity point near 0.54 omega_b",
             "J = 0 is excluded: the photon coherence vanishes on both sides and I_a is undefined"}};
}

PhysicalParams fig5_base()
{
    PhysicalParams base = fig4_base();
    base.P = 7e-7;
    base.J = 0.26 * base.omega_b;
    base.delta_B = -0.24 * base.omega_b;
    return base;
}

FigurePreset fig5()
{
    SweepSpec spec;
    spec.name = "fig5";
    spec.base = fig5_base();
    spec.axis1 = axis("g", kTwoPi * 0.5, kTwoPi * 100.0, 200, AxisScale::linear);
    return {"fig5", {spec}, {"g/2pi range [0.5, 100] Hz is an artifact choice"}};
}

FigurePreset fig6()
{
    PhysicalParams base = fig5_base();
    base.g = PhysicalParams::baseline().g;
    base.P = 1e-5;
    base.J = 0.4 * base.omega_b;
    base.delta_B = 0.25 * base.omega_b;

    SweepSpec by_kappa_a;
    by_kappa_a.name = "fig6a";
    by_kappa_a.base = base;
    by_kappa_a.axis1 = axis("kappa_a", kTwoPi * 1e5, kTwoPi * 1e7, 41, AxisScale::log);

    SweepSpec by_kappa_m = by_kappa_a;
    by_kappa_m.name = "fig6b";
    by_kappa_m.axis1.parameter = "kappa_m";

    return {"fig6",
            {by_kappa_a, by_kappa_m},
            {"decay-rate range [0.1, 10] x 2pi MHz (log) is an artifact choice",
             "g is held at its baseline value"}};
}

}  // namespace

FigurePreset figure_preset(std::string_view id)
{
    if (id == "fig2") return fig2();
    if (id == "fig3") return fig3();
    if (id == "fig4") return fig4();
    if (id == "fig5") return fig5();
    if (id == "fig6") return fig6();
    throw ConfigError("unknown figure preset '" + std::string(id) + "'");
}

std::vector<std::string> figure_preset_ids() { return {"fig2", "fig3", "fig4", "fig5", "fig6"}; }

}  // namespace cmm
