#include "cusp/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "cusp/burgers.hpp"
#include "cusp/expr.hpp"
#include "cusp/fixedpoint.hpp"
#include "cusp/ideals.hpp"
#include "cusp/series.hpp"
#include "cusp/zring.hpp"

namespace cusp {
namespace {

using nlohmann::json;

const char kUsage[] =
    "usage: cusp <command> [options]\n"
    "\n"
    "commands:\n"
    "  iterate --config FILE     run the fixed-point iteration; writes a\n"
    "                            convergence report (CSV) and the final\n"
    "                            solution data (JSON)\n"
    "  burgers --a0 EXPR         characteristic-series solve of the model\n"
    "                            conservation-law system plus shock times\n"
    "                            [--order M] [--digits D]\n"
    "  ideals                    exact membership checks for the cusp ideal\n"
    "  datum --c LIST            initial (p, q, b) slices for a fractional\n"
    "                            datum with coefficients LIST [--digits D]\n"
    "  plot --in FILE --out FILE render a convergence report as a semilog\n"
    "                            plot [--format svg|dat]\n"
    "\n"
    "The CUSP_DIGITS environment variable overrides the working precision\n"
    "of any numeric command. Exit codes: 0 ok, 2 config error, 3 numeric\n"
    "failure.\n";

// ---------------------------------------------------------------------------
// option handling

struct Options {
    std::map<std::string, std::string> values;

    bool has(const std::string& k) const { return values.count(k) != 0; }
    std::string get(const std::string& k, const std::string& fallback) const {
        auto it = values.find(k);
        return it == values.end() ? fallback : it->second;
    }
    std::string require(const std::string& k) const {
        auto it = values.find(k);
        if (it == values.end())
            throw ConfigError("missing required option --" + k);
        return it->second;
    }
};

Options parse_options(const std::vector<std::string>& args, size_t start) {
    Options opt;
    for (size_t i = start; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a.size() < 3 || a.rfind("--", 0) != 0)
            throw ConfigError("unexpected argument '" + a + "'");
        std::string key = a.substr(2);
        if (i + 1 >= args.size())
            throw ConfigError("option --" + key + " needs a value");
        opt.values[key] = args[++i];
    }
    return opt;
}

unsigned parse_unsigned(const std::string& text, const std::string& what) {
    size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(text, &pos);
    } catch (const std::exception&) {
        throw ConfigError(what + " must be a positive integer");
    }
    if (pos != text.size() || v == 0 || v > 1000000)
        throw ConfigError(what + " must be a positive integer");
    return static_cast<unsigned>(v);
}

unsigned effective_digits(unsigned base) {
    if (const char* env = std::getenv("CUSP_DIGITS"); env != nullptr && *env) {
        return parse_unsigned(env, "CUSP_DIGITS");
    }
    return base;
}

// ---------------------------------------------------------------------------
// JSON helpers

// Numbers are re-parsed from their literal text so decimal constants land
// on the working precision instead of passing through a double.
Real json_real(const json& v) {
    if (v.is_number()) return Real(v.dump());
    if (v.is_string()) return Real(v.get<std::string>());
    throw ConfigError("expected a number, got " + v.dump());
}

Coeff json_coeff(const json& v) {
    if (v.is_array()) {
        if (v.size() != 2)
            throw ConfigError("complex values are written [re, im]");
        return Coeff(json_real(v.at(0)), json_real(v.at(1)));
    }
    return Coeff(json_real(v), Real(0));
}

std::string coeff_str(const Coeff& c, unsigned digits) {
    Real re = c.real(), im = c.imag();
    if (im == 0) return re.str(digits);
    std::string s = re.str(digits);
    s += im < 0 ? " - " : " + ";
    Real a = abs(im);
    s += a.str(digits);
    s += "i";
    return s;
}

json series_table(const TruncatedSeries2& s, unsigned digits) {
    json rows = json::array();
    for (const auto& [key, c] : s.terms()) {
        unsigned l = key >> 8, m = key & 0xffu;
        rows.push_back(
            {l, m, c.real().str(digits), c.imag().str(digits)});
    }
    return rows;
}

// ---------------------------------------------------------------------------
// run configuration

struct RunConfig {
    FixedPointConfig fp;
    int root_choice = 1;
    std::string expr_p = "t/2";
    std::string expr_q = "t + x";
    std::vector<std::string> expr_b;  // empty: derive b from the datum
    std::vector<Coeff> datum;
    std::string report_path = "report.csv";
    std::string final_path = "final.json";
};

RunConfig load_config(const Options& opt) {
    RunConfig cfg;
    json j = json::object();
    std::string path = opt.require("config");
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config parse error: " + std::string(e.what()));
    }
    if (!j.is_object())
        throw ConfigError("config root must be a JSON object");
    static const char* known[] = {"digits",     "precision_digits", "order",
                                  "data_length", "iterations",      "mode",
                                  "probe",      "segment",          "samples",
                                  "root_choice", "datum",           "initial",
                                  "report",     "final"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw ConfigError("unknown config key '" + key + "'");
    }
    auto get_unsigned = [&](const char* key, unsigned fallback) {
        if (!j.contains(key)) return fallback;
        const json& v = j.at(key);
        if (!v.is_number_integer() || v.get<long long>() <= 0 ||
            v.get<long long>() > 1000000)
            throw ConfigError(std::string(key) + " must be a positive integer");
        return static_cast<unsigned>(v.get<long long>());
    };
    cfg.fp.digits = get_unsigned("digits", cfg.fp.digits);
    cfg.fp.digits = get_unsigned("precision_digits", cfg.fp.digits);
    cfg.fp.digits = effective_digits(cfg.fp.digits);
    set_precision(cfg.fp.digits);

    cfg.fp.order = get_unsigned("order", cfg.fp.order);
    cfg.fp.data_length = get_unsigned("data_length", cfg.fp.data_length);
    if (j.contains("iterations")) {
        const json& v = j.at("iterations");
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw ConfigError("iterations must be a non-negative integer");
        cfg.fp.iterations = static_cast<unsigned>(v.get<long long>());
    }
    if (j.contains("mode")) {
        std::string m = j.at("mode").is_string()
                            ? j.at("mode").get<std::string>()
                            : std::string();
        if (m == "standard")
            cfg.fp.mode = UpdateMode::standard;
        else if (m == "exact")
            cfg.fp.mode = UpdateMode::exact;
        else
            throw ConfigError("mode must be \"standard\" or \"exact\"");
    }
    if (j.contains("probe")) cfg.fp.probe = json_coeff(j.at("probe"));
    if (j.contains("segment")) {
        const json& v = j.at("segment");
        if (!v.is_array() || v.size() != 2)
            throw ConfigError("segment must be [a, b]");
        cfg.fp.segment.a = v.at(0).get<double>();
        cfg.fp.segment.b = v.at(1).get<double>();
        if (!(cfg.fp.segment.a < cfg.fp.segment.b))
            throw ConfigError("segment must satisfy a < b");
    }
    if (j.contains("samples")) {
        unsigned s = get_unsigned("samples", 0);
        if (s < 2) throw ConfigError("samples must be at least 2");
        cfg.fp.segment.samples = static_cast<int>(s);
    }
    if (j.contains("root_choice")) {
        const json& v = j.at("root_choice");
        if (!v.is_number_integer() ||
            (v.get<int>() != 1 && v.get<int>() != -1))
            throw ConfigError("root_choice must be 1 or -1");
        cfg.root_choice = v.get<int>();
    }
    if (j.contains("datum")) {
        const json& v = j.at("datum");
        if (!v.is_array() || v.empty())
            throw ConfigError("datum must be a non-empty array");
        for (const json& e : v) cfg.datum.push_back(json_coeff(e));
    }
    if (cfg.datum.empty())
        cfg.datum = {Coeff(1), Coeff(Real(3) / 4, Real(0))};
    if (j.contains("initial")) {
        const json& v = j.at("initial");
        if (!v.is_object())
            throw ConfigError("initial must be an object of expressions");
        for (const auto& [key, val] : v.items()) {
            if (key == "p")
                cfg.expr_p = val.get<std::string>();
            else if (key == "q")
                cfg.expr_q = val.get<std::string>();
            else if (key == "b") {
                if (!val.is_array())
                    throw ConfigError("initial.b must be an array of strings");
                for (const json& e : val)
                    cfg.expr_b.push_back(e.get<std::string>());
            } else {
                throw ConfigError("unknown initial component '" + key + "'");
            }
        }
    }
    if (opt.has("report")) cfg.report_path = opt.require("report");
    if (j.contains("report")) cfg.report_path = j.at("report").get<std::string>();
    if (opt.has("final")) cfg.final_path = opt.require("final");
    if (j.contains("final")) cfg.final_path = j.at("final").get<std::string>();
    return cfg;
}

SolutionData initial_from_config(const RunConfig& cfg) {
    SolutionData d;
    d.root_choice = cfg.root_choice;
    d.p = parse_series(cfg.expr_p, cfg.fp.order);
    d.q = parse_series(cfg.expr_q, cfg.fp.order);
    if (!cfg.expr_b.empty()) {
        if (cfg.expr_b.size() > cfg.fp.data_length)
            throw ConfigError("more initial b components than data_length");
        d.b.assign(cfg.fp.data_length, TruncatedSeries2(cfg.fp.order));
        for (size_t k = 0; k < cfg.expr_b.size(); ++k)
            d.b[k] = parse_series(cfg.expr_b[k], cfg.fp.order);
    } else {
        CauchyDatum datum{cfg.datum};
        d.b = datum_to_initial(datum, cfg.fp.order, cfg.fp.data_length).b;
    }
    return d;
}

void write_report_csv(const IterationReport& rep, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write report file '" + path + "'");
    out << "iteration,component,norm\n";
    for (const IterationRow& r : rep.rows)
        out << r.iteration << ',' << r.component << ',' << r.norm.str(17)
            << '\n';
}

void write_final_json(const IterateResult& res, const RunConfig& cfg,
                      const std::string& path) {
    unsigned digits = cfg.fp.digits;
    json out;
    out["order"] = cfg.fp.order;
    out["data_length"] = cfg.fp.data_length;
    out["iterations"] = cfg.fp.iterations;
    out["mode"] = cfg.fp.mode == UpdateMode::standard ? "standard" : "exact";
    out["root_choice"] = res.data.root_choice;
    out["p"] = series_table(res.data.p, digits);
    out["q"] = series_table(res.data.q, digits);
    json bs = json::array();
    for (const TruncatedSeries2& b : res.data.b)
        bs.push_back(series_table(b, digits));
    out["b"] = bs;
    out["residual_norm"] = res.report.residual_norm.str(digits);
    out["runtime_seconds"] = res.report.runtimes_sec;
    std::ofstream f(path);
    if (!f) throw ConfigError("cannot write final file '" + path + "'");
    f << out.dump(1) << '\n';
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_iterate(const Options& opt, std::ostream& out) {
    RunConfig cfg = load_config(opt);
    SolutionData d0 = initial_from_config(cfg);
    IterateResult res = iterate(d0, cfg.fp);
    write_report_csv(res.report, cfg.report_path);
    write_final_json(res, cfg, cfg.final_path);
    out << "sweeps: " << cfg.fp.iterations << "\n";
    out << "residual norm: " << res.report.residual_norm.str(6) << "\n";
    out << "report: " << cfg.report_path << "\n";
    out << "final: " << cfg.final_path << "\n";
    return 0;
}

int cmd_burgers(const Options& opt, std::ostream& out) {
    unsigned digits =
        effective_digits(opt.has("digits")
                             ? parse_unsigned(opt.require("digits"), "--digits")
                             : 30);
    set_precision(digits);
    unsigned order =
        opt.has("order") ? parse_unsigned(opt.require("order"), "--order") : 8;
    std::string a0src = opt.get("a0", "0");
    TruncatedSeries2 a0 = parse_series(a0src, order);
    for (const auto& [key, c] : a0.terms()) {
        (void)c;
        if ((key >> 8) != 0)
            throw ConfigError("a0 must be a polynomial in x alone");
    }
    CKState st = ck_solve(a0, order);
    Real rsys = system_residual(st);
    Real rfield = burgers_residual(st);

    out << "a0 = " << a0src << "\n";
    out << "order = " << order << ", digits = " << digits << "\n";
    bool trivial = st.a.is_zero() &&
                   st.p == TruncatedSeries2::var_t(order) &&
                   st.q == TruncatedSeries2::var_x(order) && rfield == 0;
    if (trivial) {
        out << "p = t, q = x, residual 0\n";
    } else {
        out << "system residual = " << rsys.str(3) << "\n";
        out << "field residual = " << rfield.str(3) << "\n";
    }

    out << "\nshock times for the square-root datum (caustic entry t0 at\n"
           "x0, absorption t* through x1):\n";
    out << "  x0        x1        t0        t*\n";
    const int num[] = {1, 1, 9, 1, 25};
    const int den[] = {16, 4, 16, 1, 16};
    for (int i = 0; i + 1 < 5; ++i) {
        Real x0 = Real(num[i]) / den[i];
        Real x1 = Real(num[i + 1]) / den[i + 1];
        ShockTimes st2 = shock_times(x0, x1);
        char buf[128];
        std::snprintf(buf, sizeof buf, "  %-8s  %-8s  %-8s  %s",
                      x0.str(4).c_str(), x1.str(4).c_str(),
                      st2.t0.str(4).c_str(), st2.tstar.str(4).c_str());
        out << buf << "\n";
    }
    return 0;
}

int cmd_ideals(std::ostream& out) {
    std::array<Poly, 3> gens = singularity_generators();
    std::vector<Poly> ideal{gens.begin(), gens.end()};
    std::vector<Poly> basis = buchberger(ideal);
    Poly b12 = poisson(gens[0], gens[1]);
    Poly b23 = poisson(gens[1], gens[2]);
    Poly b13 = poisson(gens[0], gens[2]);
    bool m12 = member(b12, basis);
    bool m23 = member(b23, basis);
    bool m13 = member(b13, basis);
    bool m13sq = member(b13 * b13, basis);
    bool rad = radical_member(b12, ideal) && radical_member(b23, ideal) &&
               radical_member(b13, ideal);
    auto word = [](bool v) { return v ? "true" : "false"; };
    out << "P12∈I: " << word(m12) << ", P23∈I: " << word(m23)
        << ", P13∈I: " << word(m13) << ", P13²∈I: " << word(m13sq)
        << ", brackets∈√I: " << word(rad) << "\n";
    return 0;
}

int cmd_datum(const Options& opt, std::ostream& out) {
    unsigned digits =
        effective_digits(opt.has("digits")
                             ? parse_unsigned(opt.require("digits"), "--digits")
                             : 30);
    set_precision(digits);
    std::string list = opt.require("c");
    std::vector<Coeff> cs;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        TruncatedSeries2 v = parse_series(item, 4);
        TruncatedSeries2 rest = v;
        rest.set_coeff(0, 0, Coeff(0));
        if (!rest.is_zero())
            throw ConfigError("datum coefficients must be constants: '" +
                              item + "'");
        cs.push_back(v.coeff(0, 0));
    }
    CauchyDatum datum{cs};
    SolutionData d =
        datum_to_initial(datum, 4, static_cast<unsigned>(cs.size()));
    out << "p(0,x) = 0\n";
    out << "q(0,x) = x\n";
    for (size_t k = 0; k < d.b.size(); ++k)
        out << "b" << k << "(0,x) = " << coeff_str(d.b[k].coeff(0, 0), 6)
            << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// plotting

struct PlotSeries {
    std::string component;
    std::vector<std::pair<unsigned, double>> points;
};

std::vector<PlotSeries> read_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open report '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || line != "iteration,component,norm")
        throw ConfigError("malformed report: expected header "
                          "\"iteration,component,norm\"");
    std::map<std::string, std::vector<std::pair<unsigned, double>>> groups;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        size_t c1 = line.find(',');
        size_t c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
        if (c2 == std::string::npos)
            throw ConfigError("malformed report line " +
                              std::to_string(lineno));
        try {
            unsigned it =
                static_cast<unsigned>(std::stoul(line.substr(0, c1)));
            std::string comp = line.substr(c1 + 1, c2 - c1 - 1);
            double norm = std::stod(line.substr(c2 + 1));
            groups[comp].emplace_back(it, norm);
        } catch (const std::exception&) {
            throw ConfigError("malformed report line " +
                              std::to_string(lineno));
        }
    }
    std::vector<PlotSeries> out;
    for (auto& [comp, pts] : groups) out.push_back({comp, std::move(pts)});
    return out;
}

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

void write_svg(const std::vector<PlotSeries>& series, std::ostream& f) {
    const double W = 800, H = 560;
    const double ml = 80, mr = 150, mt = 30, mb = 60;
    unsigned it_min = 1, it_max = 1;
    double ly_min = 0, ly_max = 0;
    bool any = false;
    for (const PlotSeries& s : series) {
        for (const auto& [it, norm] : s.points) {
            if (norm <= 0) continue;
            double ly = std::log10(norm);
            if (!any) {
                it_min = it_max = it;
                ly_min = ly_max = ly;
                any = true;
            } else {
                it_min = std::min(it_min, it);
                it_max = std::max(it_max, it);
                ly_min = std::min(ly_min, ly);
                ly_max = std::max(ly_max, ly);
            }
        }
    }
    if (!any) {
        it_min = 0;
        it_max = 1;
        ly_min = -16;
        ly_max = 0;
    }
    ly_min = std::floor(ly_min);
    ly_max = std::ceil(ly_max);
    if (ly_max - ly_min < 1) ly_max = ly_min + 1;
    if (it_max == it_min) it_max = it_min + 1;

    auto X = [&](double it) {
        return ml + (it - it_min) / double(it_max - it_min) * (W - ml - mr);
    };
    auto Y = [&](double ly) {
        return (H - mb) - (ly - ly_min) / (ly_max - ly_min) * (H - mt - mb);
    };

    f << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"560\" viewBox=\"0 0 800 560\">\n";
    f << "<rect width=\"800\" height=\"560\" fill=\"white\"/>\n";
    f << "<g stroke=\"black\" stroke-width=\"1\">\n";
    f << "<line x1=\"" << fmt2(ml) << "\" y1=\"" << fmt2(H - mb) << "\" x2=\""
      << fmt2(W - mr) << "\" y2=\"" << fmt2(H - mb) << "\"/>\n";
    f << "<line x1=\"" << fmt2(ml) << "\" y1=\"" << fmt2(mt) << "\" x2=\""
      << fmt2(ml) << "\" y2=\"" << fmt2(H - mb) << "\"/>\n";
    f << "</g>\n";

    unsigned xstep =
        std::max(1u, (it_max - it_min + 7) / 8);
    for (unsigned it = it_min; it <= it_max; it += xstep) {
        double x = X(it);
        f << "<line x1=\"" << fmt2(x) << "\" y1=\"" << fmt2(H - mb)
          << "\" x2=\"" << fmt2(x) << "\" y2=\"" << fmt2(H - mb + 6)
          << "\" stroke=\"black\"/>\n";
        f << "<text x=\"" << fmt2(x) << "\" y=\"" << fmt2(H - mb + 22)
          << "\" font-family=\"monospace\" font-size=\"13\" "
             "text-anchor=\"middle\">"
          << it << "</text>\n";
    }
    int ystep = std::max(1, static_cast<int>((ly_max - ly_min) / 8));
    for (int ly = static_cast<int>(ly_min); ly <= static_cast<int>(ly_max);
         ly += ystep) {
        double y = Y(ly);
        f << "<line x1=\"" << fmt2(ml - 6) << "\" y1=\"" << fmt2(y)
          << "\" x2=\"" << fmt2(ml) << "\" y2=\"" << fmt2(y)
          << "\" stroke=\"black\"/>\n";
        f << "<text x=\"" << fmt2(ml - 10) << "\" y=\"" << fmt2(y + 4)
          << "\" font-family=\"monospace\" font-size=\"13\" "
             "text-anchor=\"end\">1e"
          << ly << "</text>\n";
    }
    f << "<text x=\"" << fmt2((ml + W - mr) / 2) << "\" y=\"" << fmt2(H - 14)
      << "\" font-family=\"monospace\" font-size=\"14\" "
         "text-anchor=\"middle\">iteration</text>\n";
    f << "<text x=\"20\" y=\"" << fmt2((mt + H - mb) / 2)
      << "\" font-family=\"monospace\" font-size=\"14\" "
         "text-anchor=\"middle\" transform=\"rotate(-90 20 "
      << fmt2((mt + H - mb) / 2) << ")\">diff norm</text>\n";

    size_t ci = 0;
    for (const PlotSeries& s : series) {
        const char* color = kPalette[ci % 8];
        std::string pts;
        for (const auto& [it, norm] : s.points) {
            if (norm <= 0) continue;
            if (!pts.empty()) pts += ' ';
            pts += fmt2(X(it));
            pts += ',';
            pts += fmt2(Y(std::log10(norm)));
        }
        if (!pts.empty())
            f << "<polyline fill=\"none\" stroke=\"" << color
              << "\" stroke-width=\"1.5\" points=\"" << pts << "\"/>\n";
        double ly0 = mt + 18 + 20 * double(ci);
        f << "<line x1=\"" << fmt2(W - mr + 14) << "\" y1=\"" << fmt2(ly0)
          << "\" x2=\"" << fmt2(W - mr + 40) << "\" y2=\"" << fmt2(ly0)
          << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
        f << "<text x=\"" << fmt2(W - mr + 46) << "\" y=\"" << fmt2(ly0 + 4)
          << "\" font-family=\"monospace\" font-size=\"13\">" << s.component
          << "</text>\n";
        ++ci;
    }
    f << "</svg>\n";
}

void write_dat(const std::vector<PlotSeries>& series, std::ostream& f) {
    for (const PlotSeries& s : series) {
        f << "# " << s.component << "\n";
        for (const auto& [it, norm] : s.points) {
            char buf[48];
            std::snprintf(buf, sizeof buf, "%.17g", norm);
            f << it << ' ' << buf << "\n";
        }
        f << "\n";
    }
}

int cmd_plot(const Options& opt, std::ostream& out) {
    std::string in_path = opt.require("in");
    std::string out_path = opt.require("out");
    std::string format = opt.get("format", "svg");
    if (format != "svg" && format != "dat")
        throw ConfigError("format must be svg or dat");
    std::vector<PlotSeries> series = read_report(in_path);
    std::ofstream f(out_path);
    if (!f) throw ConfigError("cannot write '" + out_path + "'");
    if (format == "svg")
        write_svg(series, f);
    else
        write_dat(series, f);
    out << "plot: " << out_path << " (" << series.size() << " components)\n";
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    if (args.empty()) {
        err << kUsage;
        return 2;
    }
    const std::string& cmd = args[0];
    if (cmd == "help" || cmd == "--help" || cmd == "-h") {
        out << kUsage;
        return 0;
    }
    try {
        Options opt = parse_options(args, 1);
        if (cmd == "iterate") return cmd_iterate(opt, out);
        if (cmd == "burgers") return cmd_burgers(opt, out);
        if (cmd == "ideals") return cmd_ideals(out);
        if (cmd == "datum") return cmd_datum(opt, out);
        if (cmd == "plot") return cmd_plot(opt, out);
        err << "unknown command '" << cmd << "'\n\n" << kUsage;
        return 2;
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cusp
