#include "casimir/scenario.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace {

struct Entry {
    std::string key;
    std::string value;
    int line = 0;
    bool consumed = false;
};

struct Section {
    std::string name;
    int line = 0;
    std::vector<Entry> entries;
};

[[noreturn]] void fail(const std::string& origin, int line,
                       const std::string& msg) {
    throw InputError(origin + ":" + std::to_string(line) + ": " + msg);
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t");
    return std::string(s.substr(first, last - first + 1));
}

double ev_to_rad_s(double ev) {
    return ev * (si::joule_per_mev * 1e-6) / si::hbar;
}

double parse_double(const std::string& origin, const Entry& e,
                    std::string_view text) {
    const std::string t = trim(text);
    double v = 0.0;
    const char* begin = t.data();
    const char* end = begin + t.size();
    if (!t.empty() && t.front() == '+') {
        ++begin;
    }
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end || t.empty()) {
        fail(origin, e.line,
             "invalid number '" + t + "' for key '" + e.key + "'");
    }
    return v;
}

// Accessor over one section's entries; every surviving unconsumed key is an
// unknown-key hard error.
class Keys {
public:
    Keys(Section* sec, const std::string& origin)
        : sec_(sec), origin_(origin) {}

    bool present(const std::string& key) const {
        return sec_ != nullptr && find(key) != nullptr;
    }

    std::optional<std::string> take_string(const std::string& key) {
        Entry* e = take(key);
        if (e == nullptr) {
            return std::nullopt;
        }
        return e->value;
    }

    std::optional<double> take_double(const std::string& key) {
        Entry* e = take(key);
        if (e == nullptr) {
            return std::nullopt;
        }
        return parse_double(origin_, *e, e->value);
    }

    std::optional<int> take_int(const std::string& key) {
        Entry* e = take(key);
        if (e == nullptr) {
            return std::nullopt;
        }
        std::string t = trim(e->value);
        if (!t.empty() && t.front() == '+') {
            t.erase(t.begin());
        }
        int v = 0;
        const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
            fail(origin_, e->line,
                 "invalid integer '" + e->value + "' for key '" + key + "'");
        }
        return v;
    }

    std::optional<std::vector<double>> take_double_list(const std::string& key) {
        Entry* e = take(key);
        if (e == nullptr) {
            return std::nullopt;
        }
        std::vector<double> out;
        std::string_view rest = e->value;
        while (true) {
            const auto comma = rest.find(',');
            out.push_back(parse_double(origin_, *e, rest.substr(0, comma)));
            if (comma == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(comma + 1);
        }
        return out;
    }

    int line_of(const std::string& key) const {
        const Entry* e = find(key);
        return e != nullptr ? e->line : (sec_ != nullptr ? sec_->line : 0);
    }

    int section_line() const { return sec_ != nullptr ? sec_->line : 0; }

    void finish(const std::string& section_name) const {
        if (sec_ == nullptr) {
            return;
        }
        for (const Entry& e : sec_->entries) {
            if (!e.consumed) {
                fail(origin_, e.line,
                     "unknown key '" + e.key + "' in [" + section_name + "]");
            }
        }
    }

private:
    const Entry* find(const std::string& key) const {
        if (sec_ == nullptr) {
            return nullptr;
        }
        for (const Entry& e : sec_->entries) {
            if (e.key == key) {
                return &e;
            }
        }
        return nullptr;
    }

    Entry* take(const std::string& key) {
        if (sec_ == nullptr) {
            return nullptr;
        }
        for (Entry& e : sec_->entries) {
            if (e.key == key) {
                e.consumed = true;
                return &e;
            }
        }
        return nullptr;
    }

    Section* sec_;
    const std::string& origin_;
};

DielectricModel build_model(Keys& keys, const std::string& prefix,
                            const std::string& origin) {
    const int name_line = keys.line_of(prefix + "_model");
    const std::string model = *keys.take_string(prefix + "_model");

    const auto need_double = [&](const std::string& suffix) {
        auto v = keys.take_double(prefix + suffix);
        if (!v) {
            fail(origin, name_line,
                 "model '" + model + "' requires key '" + prefix + suffix + "'");
        }
        return *v;
    };

    if (model == "vacuum") {
        return Vacuum{};
    }
    if (model == "ideal") {
        return IdealMetal{};
    }
    if (model == "constant") {
        return ConstantEps{need_double("_eps")};
    }
    if (model == "plasma") {
        return Plasma{ev_to_rad_s(need_double("_omega_p_eV"))};
    }
    if (model == "drude") {
        const double omega_p = ev_to_rad_s(need_double("_omega_p_eV"));
        const double gamma = ev_to_rad_s(need_double("_gamma_eV"));
        return Drude{omega_p, gamma};
    }
    if (model == "oscillator") {
        auto strengths = keys.take_double_list(prefix + "_osc_strengths");
        auto omegas = keys.take_double_list(prefix + "_osc_omegas_eV");
        if (!strengths || !omegas) {
            fail(origin, name_line,
                 "model 'oscillator' requires keys '" + prefix +
                     "_osc_strengths' and '" + prefix + "_osc_omegas_eV'");
        }
        if (strengths->size() != omegas->size() || strengths->empty()) {
            fail(origin, name_line,
                 "oscillator strength and frequency lists must be non-empty "
                 "and equal length");
        }
        Oscillator osc;
        for (std::size_t i = 0; i < strengths->size(); ++i) {
            osc.terms.push_back(
                OscillatorTerm{(*strengths)[i], ev_to_rad_s((*omegas)[i])});
        }
        return osc;
    }
    fail(origin, name_line,
         "unknown model '" + model +
             "' (expected vacuum, ideal, constant, plasma, drude, oscillator)");
}

}  // namespace

Scenario parse_scenario_text(const std::string& text,
                             const std::string& origin) {
    std::vector<Section> sections;
    Section* current = nullptr;

    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') {
            raw.pop_back();
        }
        const auto hash = raw.find('#');
        if (hash != std::string::npos) {
            raw.erase(hash);
        }
        const std::string line = trim(raw);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) {
                fail(origin, line_no, "malformed section header '" + line + "'");
            }
            const std::string name = trim(line.substr(1, line.size() - 2));
            if (name != "materials" && name != "geometry" && name != "thermal" &&
                name != "sweep" && name != "output") {
                fail(origin, line_no, "unknown section [" + name + "]");
            }
            for (const Section& s : sections) {
                if (s.name == name) {
                    fail(origin, line_no, "duplicate section [" + name + "]");
                }
            }
            sections.push_back(Section{name, line_no, {}});
            current = &sections.back();
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            fail(origin, line_no, "expected 'key = value', got '" + line + "'");
        }
        if (current == nullptr) {
            fail(origin, line_no, "key before any [section] header");
        }
        Entry e;
        e.key = trim(line.substr(0, eq));
        e.value = trim(line.substr(eq + 1));
        e.line = line_no;
        if (e.key.empty()) {
            fail(origin, line_no, "empty key");
        }
        if (e.value.empty()) {
            fail(origin, line_no, "empty value for key '" + e.key + "'");
        }
        for (const Entry& prev : current->entries) {
            if (prev.key == e.key) {
                fail(origin, line_no,
                     "duplicate key '" + e.key + "' (first on line " +
                         std::to_string(prev.line) + ")");
            }
        }
        current->entries.push_back(std::move(e));
    }

    const auto section = [&](const std::string& name) -> Section* {
        for (Section& s : sections) {
            if (s.name == name) {
                return &s;
            }
        }
        return nullptr;
    };

    Scenario out;

    Keys materials(section("materials"), origin);
    if (materials.present("halfspace_model")) {
        out.halfspace = build_model(materials, "halfspace", origin);
    }
    if (materials.present("gap_model")) {
        out.gap = build_model(materials, "gap", origin);
    }
    if (auto kappa = materials.take_double("kappa_per_m")) {
        if (!(*kappa >= 0.0)) {
            fail(origin, materials.line_of("kappa_per_m"),
                 "kappa_per_m must be >= 0");
        }
        out.kappa_per_m = *kappa;
    }
    if (auto src = materials.take_string("kappa_source")) {
        if (*src != "supplied" && *src != "pair-density") {
            fail(origin, materials.line_of("kappa_source"),
                 "kappa_source must be 'supplied' or 'pair-density'");
        }
        if (*src == "pair-density" && out.kappa_per_m) {
            fail(origin, materials.line_of("kappa_source"),
                 "kappa_source 'pair-density' contradicts explicit kappa_per_m");
        }
        out.kappa_source = *src;
    }
    if (materials.present("alpha0_m3")) {
        PolarizabilityModel pol;
        pol.alpha0 = *materials.take_double("alpha0_m3");
        std::string mode = "static";
        if (auto m = materials.take_string("pol_mode")) {
            mode = *m;
        }
        if (mode == "static") {
            pol.mode = PolarizabilityMode::StaticOnly;
            if (materials.present("omega0_eV")) {
                fail(origin, materials.line_of("omega0_eV"),
                     "omega0_eV is not applicable to pol_mode 'static'");
            }
        } else if (mode == "london") {
            pol.mode = PolarizabilityMode::London;
            auto w = materials.take_double("omega0_eV");
            if (!w) {
                fail(origin, materials.section_line(),
                     "pol_mode 'london' requires key 'omega0_eV'");
            }
            pol.omega0 = ev_to_rad_s(*w);
        } else {
            fail(origin, materials.line_of("pol_mode"),
                 "pol_mode must be 'static' or 'london'");
        }
        validate_polarizability(pol);
        out.polarizability = pol;
    }
    if (auto s = materials.take_int("branch_sign")) {
        if (*s != 1 && *s != -1) {
            fail(origin, materials.line_of("branch_sign"),
                 "branch_sign must be +1 or -1");
        }
        out.branch_sign = *s;
    }
    materials.finish("materials");

    Keys geometry(section("geometry"), origin);
    {
        auto d_um = geometry.take_double("d_um");
        auto d_fm = geometry.take_double("d_fm");
        if (d_um && d_fm) {
            fail(origin, geometry.line_of("d_um"),
                 "give exactly one of d_um and d_fm");
        }
        if (d_um) {
            if (!(*d_um > 0.0)) {
                fail(origin, geometry.line_of("d_um"), "d_um must be > 0");
            }
            out.separation = *d_um * 1e-6;
        }
        if (d_fm) {
            if (!(*d_fm > 0.0)) {
                fail(origin, geometry.line_of("d_fm"), "d_fm must be > 0");
            }
            out.separation = *d_fm * si::metre_per_fm;
        }
        if (section("geometry") != nullptr && !out.separation) {
            fail(origin, geometry.section_line(),
                 "[geometry] requires d_um or d_fm");
        }
    }
    geometry.finish("geometry");

    Keys thermal(section("thermal"), origin);
    if (auto t = thermal.take_double("T_K")) {
        if (!(*t >= 0.0)) {
            fail(origin, thermal.line_of("T_K"), "T_K must be >= 0");
        }
        out.temperature = *t;
    } else if (section("thermal") != nullptr) {
        fail(origin, thermal.section_line(), "[thermal] requires T_K");
    }
    thermal.finish("thermal");

    Keys sweep(section("sweep"), origin);
    if (section("sweep") != nullptr) {
        SweepSpec spec;
        auto var = sweep.take_string("variable");
        if (!var || (*var != "d" && *var != "T")) {
            fail(origin, sweep.section_line(),
                 "[sweep] requires variable = d or variable = T");
        }
        spec.variable = *var;
        const std::string lo_key = (*var == "d") ? "from_um" : "from_K";
        const std::string hi_key = (*var == "d") ? "to_um" : "to_K";
        const std::string bad_lo = (*var == "d") ? "from_K" : "from_um";
        const std::string bad_hi = (*var == "d") ? "to_K" : "to_um";
        if (sweep.present(bad_lo) || sweep.present(bad_hi)) {
            fail(origin, sweep.section_line(),
                 "sweep bounds must match the variable: use " + lo_key + "/" +
                     hi_key);
        }
        auto lo = sweep.take_double(lo_key);
        auto hi = sweep.take_double(hi_key);
        if (!lo || !hi) {
            fail(origin, sweep.section_line(),
                 "[sweep] requires " + lo_key + " and " + hi_key);
        }
        const double unit = (*var == "d") ? 1e-6 : 1.0;
        spec.from = *lo * unit;
        spec.to = *hi * unit;
        if (!(spec.from > 0.0) || !(spec.to > spec.from)) {
            fail(origin, sweep.line_of(hi_key),
                 "sweep bounds must satisfy 0 < from < to");
        }
        auto points = sweep.take_int("points");
        if (!points || *points < 2) {
            fail(origin, sweep.section_line(), "[sweep] requires points >= 2");
        }
        spec.points = *points;
        if (auto spacing = sweep.take_string("spacing")) {
            if (*spacing == "log") {
                spec.log_spacing = true;
            } else if (*spacing == "linear") {
                spec.log_spacing = false;
            } else {
                fail(origin, sweep.line_of("spacing"),
                     "spacing must be 'log' or 'linear'");
            }
        }
        out.sweep = spec;
    }
    sweep.finish("sweep");

    Keys output(section("output"), origin);
    if (auto units = output.take_string("units")) {
        out.units = unit_system_from_string(*units);
    }
    output.finish("output");

    return out;
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open scenario file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str(), path);
}

}  // namespace casimir
