#include "dgbo/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cctype>
#include <numbers>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace dgbo {

namespace {

// thrown by value parsers; position is filled in by the caller
struct ValueError {
    std::string what;
    std::size_t offset = 0;  // within the value text
};

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
    std::size_t a = 0, b = s.size();
    while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r')) ++a;
    while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
    if (lead) *lead = a;
    return s.substr(a, b - a);
}

std::vector<std::pair<std::string_view, std::size_t>> split_list(std::string_view v, char sep = ',') {
    std::vector<std::pair<std::string_view, std::size_t>> out;
    if (trim(v).empty()) return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = v.find(sep, pos);
        std::string_view piece = v.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
        std::size_t lead = 0;
        std::string_view t = trim(piece, &lead);
        if (t.empty()) throw ValueError{"empty list element", pos};
        out.emplace_back(t, pos + lead);
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

double to_double(std::string_view s, std::size_t off = 0) {
    std::string buf(s);
    char* end = nullptr;
    errno = 0;
    double v = std::strtod(buf.c_str(), &end);
    if (buf.empty() || end != buf.c_str() + buf.size() || errno == ERANGE || !std::isfinite(v))
        throw ValueError{"expected a finite number, got '" + buf + "'", off};
    return v;
}

long to_long(std::string_view s, std::size_t off = 0) {
    std::string buf(s);
    char* end = nullptr;
    errno = 0;
    long v = std::strtol(buf.c_str(), &end, 10);
    if (buf.empty() || end != buf.c_str() + buf.size() || errno == ERANGE)
        throw ValueError{"expected an integer, got '" + buf + "'", off};
    return v;
}

int to_int(std::string_view s, std::size_t off = 0) {
    long v = to_long(s, off);
    if (v < -2147483647L || v > 2147483647L) throw ValueError{"integer out of range", off};
    return static_cast<int>(v);
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <class T, class F>
std::string join(const std::vector<T>& xs, F&& f) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += f(xs[i]);
    }
    return out;
}

std::vector<std::pair<long, double>> to_modes(std::string_view v) {
    std::vector<std::pair<long, double>> out;
    for (auto [piece, off] : split_list(v)) {
        std::size_t colon = piece.find(':');
        if (colon == std::string_view::npos) throw ValueError{"expected 'k:amplitude'", off};
        std::size_t l1 = 0, l2 = 0;
        std::string_view k = trim(piece.substr(0, colon), &l1);
        std::string_view a = trim(piece.substr(colon + 1), &l2);
        long kk = to_long(k, off + l1);
        if (kk < 0) throw ValueError{"mode index must be nonnegative", off + l1};
        out.emplace_back(kk, to_double(a, off + colon + 1 + l2));
    }
    return out;
}

struct Field {
    const char* key;
    std::function<void(Config&, std::string_view)> set;
    std::function<std::string(const Config&)> get;
};

#define DGBO_DOUBLE(k, m) \
    Field{k, [](Config& c, std::string_view v) { c.m = to_double(v); }, [](const Config& c) { return fmt_double(c.m); }}
#define DGBO_INT(k, m) \
    Field{k, [](Config& c, std::string_view v) { c.m = to_int(v); }, [](const Config& c) { return std::to_string(c.m); }}
#define DGBO_STRING(k, m) \
    Field{k, [](Config& c, std::string_view v) { c.m = std::string(v); }, [](const Config& c) { return c.m; }}
#define DGBO_DLIST(k, m)                                                                              \
    Field{k,                                                                                          \
          [](Config& c, std::string_view v) {                                                         \
              c.m.clear();                                                                            \
              for (auto [p, o] : split_list(v)) c.m.push_back(to_double(p, o));                       \
          },                                                                                          \
          [](const Config& c) { return join(c.m, fmt_double); }}
#define DGBO_ILIST(k, m)                                                                              \
    Field{k,                                                                                          \
          [](Config& c, std::string_view v) {                                                         \
              c.m.clear();                                                                            \
              for (auto [p, o] : split_list(v)) c.m.push_back(to_int(p, o));                          \
          },                                                                                          \
          [](const Config& c) { return join(c.m, [](int x) { return std::to_string(x); }); }}
#define DGBO_MODES(k, m)                                                                              \
    Field{k, [](Config& c, std::string_view v) { c.m = to_modes(v); },                                \
          [](const Config& c) {                                                                       \
              return join(c.m, [](const std::pair<long, double>& p) {                                 \
                  return std::to_string(p.first) + ":" + fmt_double(p.second);                        \
              });                                                                                     \
          }}

const std::vector<Field>& fields() {
    static const std::vector<Field> table = {
        Field{"seed",
              [](Config& c, std::string_view v) {
                  long s = to_long(v);
                  if (s < 0) throw ValueError{"seed must be nonnegative", 0};
                  c.seed = static_cast<std::uint64_t>(s);
              },
              [](const Config& c) { return std::to_string(c.seed); }},
        DGBO_DOUBLE("solver.alpha", solver.alpha),
        DGBO_STRING("solver.dispersion", solver.dispersion),
        DGBO_DOUBLE("solver.whitham_tau", solver.whitham_tau),
        DGBO_DOUBLE("solver.kappa", solver.kappa),
        DGBO_INT("solver.n_points", solver.n_points),
        DGBO_DOUBLE("solver.horizon", solver.horizon),
        DGBO_DOUBLE("solver.dt", solver.dt),
        DGBO_STRING("solver.dt_policy", solver.dt_policy),
        DGBO_STRING("solver.integrator", solver.integrator),
        DGBO_INT("solver.record_every", solver.record_every),
        DGBO_DLIST("solver.s_list", solver.s_list),
        DGBO_STRING("scenario.kind", scenario.kind),
        DGBO_DOUBLE("scenario.s", scenario.s),
        DGBO_DOUBLE("scenario.r", scenario.r),
        DGBO_INT("scenario.n_data", scenario.n_data),
        DGBO_DOUBLE("scenario.norm_target", scenario.norm_target),
        DGBO_ILIST("scenario.n_grid", scenario.n_grid),
        DGBO_ILIST("scenario.lambda_grid", scenario.lambda_grid),
        DGBO_DLIST("scenario.c_grid", scenario.c_grid),
        DGBO_DOUBLE("scenario.delta", scenario.delta),
        DGBO_DOUBLE("scenario.ratio_cap", scenario.ratio_cap),
        DGBO_DOUBLE("scenario.tolerance", scenario.tolerance),
        DGBO_ILIST("scenario.packet_freqs", scenario.packet_freqs),
        DGBO_STRING("verifier.case", verifier.case_id),
        DGBO_INT("verifier.kmax", verifier.kmax),
        DGBO_DOUBLE("verifier.budget", verifier.budget),
        DGBO_DOUBLE("verifier.alpha", verifier.alpha),
        DGBO_INT("verifier.seeds", verifier.seeds),
        DGBO_STRING("data.kind", data.kind),
        DGBO_MODES("data.cos", data.cos_modes),
        DGBO_MODES("data.sin", data.sin_modes),
        DGBO_DOUBLE("data.s", data.s),
        DGBO_DOUBLE("data.norm", data.norm),
    };
    return table;
}

[[noreturn]] void syntax_error(std::size_t line, std::size_t col, const std::string& what) {
    fail(ErrorKind::Config, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

bool one_of(const std::string& v, std::initializer_list<const char*> opts) {
    for (const char* o : opts)
        if (v == o) return true;
    return false;
}

} // namespace

Config parse_config(std::string_view text) {
    Config cfg;
    std::set<std::string> seen;
    std::size_t line_no = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++line_no;
        std::size_t hash = line.find('#');
        std::string_view body = hash == std::string_view::npos ? line : line.substr(0, hash);
        if (!trim(body).empty()) {
            std::size_t eq = body.find('=');
            std::size_t klead = 0;
            std::string_view key = trim(body.substr(0, eq == std::string_view::npos ? body.size() : eq), &klead);
            if (eq == std::string_view::npos) syntax_error(line_no, klead + 1, "expected 'key = value'");
            if (key.empty()) syntax_error(line_no, eq + 1, "missing key before '='");
            for (std::size_t i = 0; i < key.size(); ++i) {
                char ch = key[i];
                if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.'))
                    syntax_error(line_no, klead + i + 1, std::string("invalid character '") + ch + "' in key");
            }
            std::size_t vlead = 0;
            std::string_view value = trim(body.substr(eq + 1), &vlead);
            std::size_t vcol = eq + 1 + vlead + 1;
            if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
                value = value.substr(1, value.size() - 2);
                ++vcol;
            }
            const Field* f = nullptr;
            for (const auto& cand : fields())
                if (key == cand.key) f = &cand;
            if (!f) syntax_error(line_no, klead + 1, "unknown key '" + std::string(key) + "'");
            if (!seen.insert(std::string(key)).second)
                syntax_error(line_no, klead + 1, "duplicate key '" + std::string(key) + "'");
            try {
                f->set(cfg, value);
            } catch (const ValueError& e) {
                syntax_error(line_no, vcol + e.offset, e.what);
            }
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    validate_config(cfg);
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), ErrorKind::Io, "cannot read config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const Config& cfg) {
    std::string out;
    for (const auto& f : fields()) out += std::string(f.key) + " = " + f.get(cfg) + "\n";
    return out;
}

void validate_config(const Config& c) {
    auto bad = [](const std::string& what) { fail(ErrorKind::Config, what); };
    const auto& s = c.solver;
    if (!(s.alpha > 0.0 && s.alpha < 1.0)) bad("alpha must lie in (0,1)");
    if (!one_of(s.dispersion, {"fractional", "whitham"})) bad("solver.dispersion must be fractional or whitham");
    if (!(s.whitham_tau > 0.0)) bad("solver.whitham_tau must be positive");
    if (!(s.kappa > 0.0)) bad("solver.kappa must be positive");
    if (s.n_points < 8 || (s.n_points & (s.n_points - 1)) != 0) bad("solver.n_points must be a power of two >= 8");
    if (!(s.horizon > 0.0)) bad("solver.horizon must be positive");
    if (!(s.dt > 0.0)) bad("solver.dt must be positive");
    if (!one_of(s.dt_policy, {"cfl", "fixed"})) bad("solver.dt_policy must be cfl or fixed");
    if (!one_of(s.integrator, {"etdrk4", "ifrk4"})) bad("solver.integrator must be etdrk4 or ifrk4");
    if (s.record_every < 1) bad("solver.record_every must be at least 1");

    const auto& sc = c.scenario;
    ScenarioKind kind = parse_scenario(sc.kind);
    const double threshold = 1.5 - s.alpha;
    if ((kind == ScenarioKind::Apriori || kind == ScenarioKind::DifferenceHs) && !(sc.s > threshold))
        bad("s must exceed 3/2 - alpha for the " + sc.kind + " scenario");
    if (!(sc.r >= sc.s)) bad("r must satisfy r >= s");
    if (sc.n_data < 1) bad("scenario.n_data must be at least 1");
    if (!(sc.norm_target > 0.0)) bad("scenario.norm_target must be positive");
    if (!(sc.delta > 0.0)) bad("scenario.delta must be positive");
    if (!(sc.ratio_cap > 0.0)) bad("scenario.ratio_cap must be positive");
    if (!(sc.tolerance > 0.0)) bad("scenario.tolerance must be positive");
    for (int n : sc.n_grid)
        if (n < 0) bad("scenario.n_grid entries must be nonnegative");
    for (int p : sc.packet_freqs)
        if (p < 1) bad("scenario.packet_freqs entries must be positive");

    const auto& v = c.verifier;
    if (!(v.alpha > 0.0 && v.alpha < 1.0)) bad("alpha must lie in (0,1)");
    if (v.kmax < 1) bad("verifier.kmax must be at least 1");
    if (!(v.budget >= 1.0)) bad("verifier.budget must be at least 1");
    if (v.seeds < 1) bad("verifier.seeds must be at least 1");

    const auto& d = c.data;
    if (!one_of(d.kind, {"random", "modes"})) bad("data.kind must be random or modes");
    if (!(d.norm > 0.0)) bad("data.norm must be positive");
}

DispersionSpec make_dispersion(const SolverSection& s) {
    if (s.dispersion == "whitham") return DispersionSpec::whitham_capillary(s.whitham_tau, s.kappa);
    return DispersionSpec::fractional(s.alpha);
}

SolverConfig to_solver_config(const Config& c) {
    SolverConfig sc;
    sc.dispersion = make_dispersion(c.solver);
    sc.grid = TorusGrid(c.solver.n_points);
    sc.dt = c.solver.dt;
    sc.dt_policy = c.solver.dt_policy == "fixed" ? DtPolicy::Fixed : DtPolicy::Cfl;
    sc.horizon = c.solver.horizon;
    sc.integrator = c.solver.integrator == "ifrk4" ? Integrator::IntegratingFactorRK4 : Integrator::ETDRK4;
    sc.record_every = c.solver.record_every;
    sc.s_list = c.solver.s_list;
    return sc;
}

SpectralField initial_datum(const Config& c) {
    TorusGrid g(c.solver.n_points);
    if (c.data.kind == "random") return random_smooth_datum(g, c.data.s, c.data.norm, c.seed);
    SpectralField u(g);
    for (auto [k, a] : c.data.cos_modes) {
        require(g.resolves(k), ErrorKind::Config, "data.cos mode " + std::to_string(k) + " is not resolved");
        if (k == 0) u.coeffs()[0] += a * kTwoPi;
        else u.set_mode(k, u.at(k) + cplx(a * std::numbers::pi, 0.0));
    }
    for (auto [k, b] : c.data.sin_modes) {
        require(g.resolves(k), ErrorKind::Config, "data.sin mode " + std::to_string(k) + " is not resolved");
        if (k == 0) continue;
        u.set_mode(k, u.at(k) + cplx(0.0, -b * std::numbers::pi));
    }
    return u;
}

ScenarioConfig to_scenario_config(const Config& c) {
    ScenarioConfig sc;
    sc.kind = parse_scenario(c.scenario.kind);
    sc.solver = to_solver_config(c);
    sc.s = c.scenario.s;
    sc.r = c.scenario.r;
    sc.n_data = c.scenario.n_data;
    sc.norm_target = c.scenario.norm_target;
    sc.n_grid = c.scenario.n_grid;
    sc.lambda_grid = c.scenario.lambda_grid;
    sc.c_grid = c.scenario.c_grid;
    sc.delta = c.scenario.delta;
    sc.ratio_cap = c.scenario.ratio_cap;
    sc.tolerance = c.scenario.tolerance;
    sc.packet_freqs = c.scenario.packet_freqs;
    sc.seed = c.seed;
    if (c.data.kind == "modes") sc.datum = initial_datum(c);
    return sc;
}

} // namespace dgbo
