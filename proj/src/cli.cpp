#include "zetalab/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "zetalab/dirichlet.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/identities.hpp"
#include "zetalab/modular.hpp"
#include "zetalab/polyroots.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// ----------------------------------------------------------- value parsing

// number := rational | decimal ; value := [number ['*']] ["pi" ["^" int]] ["/" number]
BigReal parse_real(const std::string& text, const PrecisionContext& ctx) {
    mpfr_prec_t bits = ctx.working_bits();
    auto parse_number = [&](const std::string& s) -> BigReal {
        if (s.find('/') != std::string::npos || s.find('.') == std::string::npos)
            return BigReal(Rational(s), bits);
        return BigReal::from_string(s, bits);
    };
    size_t pi_pos = text.find("pi");
    if (pi_pos == std::string::npos) return parse_number(text);

    std::string prefix = text.substr(0, pi_pos);
    std::string suffix = text.substr(pi_pos + 2);
    if (!prefix.empty() && prefix.back() == '*') prefix.pop_back();
    BigReal value = prefix.empty() ? BigReal(1, bits) : parse_number(prefix);
    long power = 1;
    if (!suffix.empty() && suffix[0] == '^') {
        size_t end = suffix.find('/');
        power = std::stol(suffix.substr(1, end == std::string::npos ? end : end - 1));
        suffix = (end == std::string::npos) ? "" : suffix.substr(end);
    }
    value *= pow_int(const_pi(ctx), power);
    if (!suffix.empty()) {
        if (suffix[0] != '/') throw ValidationError("cannot parse value \"" + text + "\"");
        value /= parse_number(suffix.substr(1));
    }
    return value;
}

BigComplex parse_complex(const std::string& text, const PrecisionContext& ctx) {
    mpfr_prec_t bits = ctx.working_bits();
    if (text == "i") return BigComplex(0, 1, bits);
    size_t comma = text.find(',');
    if (comma == std::string::npos)
        return BigComplex(parse_real(text, ctx), BigReal(0, bits));
    return {parse_real(text.substr(0, comma), ctx), parse_real(text.substr(comma + 1), ctx)};
}

std::vector<long> parse_range(const std::string& text) {
    size_t dots = text.find("..");
    if (dots == std::string::npos) return {std::stol(text)};
    long lo = std::stol(text.substr(0, dots));
    long hi = std::stol(text.substr(dots + 2));
    if (hi < lo) throw ValidationError("empty range \"" + text + "\"");
    std::vector<long> out;
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

Mat2 parse_matrix(const std::string& text) {
    std::stringstream ss(text);
    Mat2 v;
    char comma;
    if (!(ss >> v.a >> comma >> v.b >> comma >> v.c >> comma >> v.d))
        throw ValidationError("cannot parse matrix \"" + text + "\" (want a,b,c,d)");
    return v;
}

// ------------------------------------------------------------ worker pool

void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(), 8);
    if (workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

// ------------------------------------------------------------- formatting

std::string param_string(const std::map<std::string, std::string>& params) {
    std::string s;
    for (const auto& [k, v] : params) {
        if (!s.empty()) s += ";";
        s += k + "=" + v;
    }
    return s;
}

ordered_json report_to_json(const VerificationReport& rep, int digits) {
    ordered_json j;
    j["id"] = rep.id;
    j["params"] = rep.params;
    j["lhs"] = rep.lhs.str(digits);
    j["rhs"] = rep.rhs.str(digits);
    j["residual"] = rep.abs_residual.str(6);
    j["tolerance"] = rep.tolerance.str(4);
    j["passed"] = rep.passed;
    j["terms_used"] = rep.terms_used;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

ordered_json root_report_to_json(const UnimodularityReport& rep, long degree,
                                 const PrecisionContext& ctx) {
    int digits = ctx.target_digits();
    ordered_json j;
    j["poly_id"] = rep.poly_id;
    j["degree"] = degree;
    ordered_json roots = ordered_json::array();
    for (const auto& cert : rep.roots) {
        ordered_json r;
        r["re"] = cert.root.re().str(digits);
        r["im"] = cert.root.im().str(digits);
        r["residual"] = cert.residual.str(4);
        r["on_circle"] = cert.unit_circle_distance < rep.tolerance;
        r["is_real"] = cert.is_real;
        roots.push_back(std::move(r));
    }
    j["roots"] = std::move(roots);
    j["num_real"] = rep.num_real;
    j["max_unit_distance"] = rep.max_unit_distance.str(4);
    j["verdict"] = rep.verdict;
    return j;
}

void emit(std::ostream& out, const JobConfig& config, const ordered_json& doc,
          const std::string& text) {
    if (config.format == JobConfig::Format::json)
        out << doc.dump(2) << "\n";
    else
        out << text;
}

// --------------------------------------------------------------- commands

PrecisionContext make_context(const JobConfig& config) {
    if (config.precision < 10 || config.precision > 10000)
        throw ValidationError("precision must be in [10, 10000]");
    long max_terms = 2'000'000;
    if (const char* env = std::getenv("ZETALAB_MAX_TERMS")) max_terms = std::atol(env);
    return PrecisionContext(config.precision, 20, max_terms);
}

int cmd_list(const JobConfig& config, std::ostream& out) {
    ordered_json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = "list";
    ordered_json items = ordered_json::array();
    std::string text;
    for (const auto& info : identity_registry()) {
        ordered_json item;
        item["id"] = info.name;
        item["formula"] = info.formula;
        ordered_json ps = ordered_json::array();
        for (const auto& p : info.params) {
            ordered_json pj;
            pj["name"] = p.name;
            pj["kind"] = p.kind;
            pj["domain"] = p.domain;
            ps.push_back(std::move(pj));
        }
        item["params"] = std::move(ps);
        items.push_back(std::move(item));
        text += info.name + "\n    " + info.formula + "\n";
    }
    doc["identities"] = std::move(items);
    emit(out, config, doc, text);
    return 0;
}

int cmd_zeta(const JobConfig& config, std::ostream& out) {
    PrecisionContext ctx = make_context(config);
    auto it = config.params.find("s");
    if (it == config.params.end()) throw ValidationError("zeta: --s is required");
    long s = std::stol(it->second);
    int digits = ctx.target_digits();

    ordered_json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = "zeta";
    doc["s"] = s;
    doc["digits"] = digits;
    std::string text;

    if (s >= 3 && s % 2 == 1) {
        std::string method = "ramanujan";
        if (auto m = config.params.find("method"); m != config.params.end()) method = m->second;
        ZetaOddValue v = (method == "oracle") ? zeta_odd_oracle(s, ctx) : zeta_odd_fast(s, ctx);
        doc["method"] = (v.method == ZetaMethod::ramanujan) ? "ramanujan" : "oracle";
        doc["value"] = v.value.str(digits);
        if (v.pi_power_coefficient)
            doc["pi_power_coefficient"] = v.pi_power_coefficient->str();
        text = "zeta(" + std::to_string(s) + ") = " + v.value.str(digits) +
               "  (method=" + doc["method"].get<std::string>() + ", " +
               std::to_string(digits) + " digits)\n";
    } else if (s >= 2 && s % 2 == 0) {
        ZetaEvenValue v = zeta_even(s / 2);
        BigReal value = zeta_even_value(s / 2, ctx);
        doc["method"] = "euler";
        doc["rational_part"] = v.rational_part.str();
        doc["value"] = value.str(digits);
        text = "zeta(" + std::to_string(s) + ") = (" + v.rational_part.str() + ") * pi^" +
               std::to_string(s) + " = " + value.str(digits) + "\n";
    } else if (s < 0 && s % 2 != 0) {
        Rational v = zeta_negative_odd((1 - s) / 2);
        doc["method"] = "exact";
        doc["value"] = v.str();
        text = "zeta(" + std::to_string(s) + ") = " + v.str() + "\n";
    } else if (s < 0 && s % 2 == 0) {
        doc["method"] = "exact";
        doc["value"] = "0";
        text = "zeta(" + std::to_string(s) + ") = 0\n";
    } else if (s == 0) {
        doc["method"] = "exact";
        doc["value"] = "-1/2";
        text = "zeta(0) = -1/2\n";
    } else {
        throw ValidationError("zeta: s = 1 is the pole");
    }
    emit(out, config, doc, text);
    return 0;
}

int cmd_verify(const JobConfig& config, std::ostream& out) {
    PrecisionContext ctx = make_context(config);
    auto it = config.params.find("id");
    if (it == config.params.end()) throw ValidationError("verify: --id is required");
    IdentityId id = identity_from_string(it->second);

    EisensteinParams base = default_params(id, ctx);
    auto get = [&](const char* key) -> std::optional<std::string> {
        auto f = config.params.find(key);
        if (f == config.params.end()) return std::nullopt;
        return f->second;
    };
    if (auto v = get("alpha")) base.alpha = parse_real(*v, ctx);
    if (auto v = get("beta")) base.beta = parse_real(*v, ctx);
    if (auto v = get("w")) base.w = parse_real(*v, ctx);
    if (auto v = get("x")) base.x = parse_real(*v, ctx);
    if (auto v = get("y")) base.y = parse_real(*v, ctx);
    if (auto v = get("z")) base.z = parse_complex(*v, ctx);
    if (auto v = get("r1")) base.r1 = Rational(*v);
    if (auto v = get("r2")) base.r2 = Rational(*v);
    if (auto v = get("V")) base.V = parse_matrix(*v);
    if (auto v = get("alpha"); v && !get("beta")) base.beta.reset(); // recompute as pi^2/alpha

    // n/m may be single values or ranges, producing a verification grid
    std::vector<EisensteinParams> grid;
    std::vector<long> ns = get("n") ? parse_range(*get("n"))
                                    : std::vector<long>{base.n ? *base.n : 0};
    std::vector<long> ms = get("m") ? parse_range(*get("m"))
                                    : std::vector<long>{base.m ? *base.m : 0};
    for (long n : ns)
        for (long m : ms) {
            EisensteinParams p = base;
            if (get("n") || base.n) p.n = n;
            if (get("m") || base.m) p.m = m;
            grid.push_back(std::move(p));
        }

    std::vector<VerificationReport> reports(grid.size());
    parallel_for(grid.size(), [&](size_t i) { reports[i] = verify(id, grid[i], ctx); });

    bool all_passed = true;
    ordered_json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = "verify";
    ordered_json items = ordered_json::array();
    std::string text;
    std::string csv = "id,params,lhs,rhs,residual,passed\n";
    for (const auto& rep : reports) {
        all_passed = all_passed && rep.passed;
        items.push_back(report_to_json(rep, ctx.target_digits()));
        text += rep.id + " [" + param_string(rep.params) + "] residual=" +
                rep.abs_residual.str(6) + " " + (rep.passed ? "PASS" : "FAIL") + "\n";
        csv += rep.id + ",\"" + param_string(rep.params) + "\"," + rep.lhs.str(20) + "," +
               rep.rhs.str(20) + "," + rep.abs_residual.str(6) + "," +
               (rep.passed ? "true" : "false") + "\n";
    }
    doc["reports"] = std::move(items);
    if (config.format == JobConfig::Format::csv)
        out << csv;
    else
        emit(out, config, doc, text);
    return all_passed ? 0 : 1;
}

int cmd_roots(const JobConfig& config, std::ostream& out) {
    PrecisionContext ctx = make_context(config);
    auto fam = config.params.find("family");
    std::string family = (fam == config.params.end()) ? "ramanujan" : fam->second;
    std::vector<long> ms = config.params.count("m") ? parse_range(config.params.at("m"))
                                                    : std::vector<long>{1};

    struct Item {
        UnimodularityReport report;
        long degree;
    };
    std::vector<Item> items(ms.size());
    parallel_for(ms.size(), [&](size_t i) {
        long m = ms[i];
        ComplexPoly poly = [&]() -> ComplexPoly {
            if (family == "ramanujan")
                return ComplexPoly::from_rational(ramanujan_poly(m), 2 * ctx.working_bits());
            if (family == "full_period") return full_period_poly(m, ctx);
            if (family == "pm") return pm_poly(m, ctx);
            if (family == "pm_odd") return pm_odd_over_z(m, ctx);
            throw ValidationError("roots: unknown family \"" + family + "\"");
        }();
        CircleClass cls = (family == "ramanujan") ? CircleClass::NonrealOnly
                                                  : CircleClass::AllRoots;
        std::string poly_id = family + "_m" + std::to_string(m);
        items[i] = {unimodularity_report(poly_id, poly, ctx, cls), poly.degree()};
    });

    bool all_good = true;
    ordered_json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = "roots";
    doc["family"] = family;
    ordered_json arr = ordered_json::array();
    std::string text;
    for (const auto& item : items) {
        all_good = all_good && item.report.verdict;
        arr.push_back(root_report_to_json(item.report, item.degree, ctx));
        text += item.report.poly_id + ": degree=" + std::to_string(item.degree) +
                " num_real=" + std::to_string(item.report.num_real) +
                " max_unit_distance=" + item.report.max_unit_distance.str(4) + " verdict=" +
                (item.report.verdict ? "true" : "false") + "\n";
    }
    doc["reports"] = std::move(arr);
    emit(out, config, doc, text);
    return all_good ? 0 : 1;
}

int cmd_conjecture(const JobConfig& config, std::ostream& out) {
    PrecisionContext ctx = make_context(config);
    long kmax = config.params.count("kmax") ? std::stol(config.params.at("kmax")) : 8;
    long max_modulus =
        config.params.count("max-modulus") ? std::stol(config.params.at("max-modulus")) : 12;
    long M = config.params.count("modulus-M") ? std::stol(config.params.at("modulus-M")) : 0;

    std::vector<DirichletCharacter> chars;
    if (config.params.count("chi-file") && config.params.count("psi-file")) {
        chars.push_back(load_character_json(config.params.at("chi-file"), true));
        chars.push_back(load_character_json(config.params.at("psi-file"), true));
    } else {
        for (long L = 3; L <= max_modulus; ++L)
            for (auto& chi : enumerate_real_characters(L, false)) chars.push_back(chi);
    }
    bool pair_mode = config.params.count("chi-file") && config.params.count("psi-file");

    struct Job {
        const DirichletCharacter* chi;
        const DirichletCharacter* psi;
        long k;
    };
    std::vector<Job> jobs;
    std::vector<long> ks = config.params.count("k") ? parse_range(config.params.at("k"))
                                                    : parse_range("2.." + std::to_string(kmax));
    if (pair_mode) {
        for (long k : ks) jobs.push_back({&chars[0], &chars[1], k});
    } else {
        for (const auto& chi : chars)
            for (const auto& psi : chars)
                for (long k : ks) jobs.push_back({&chi, &psi, k});
    }

    struct Result {
        std::string pair_id;
        long k = 0;
        bool degenerate = true;
        long degree = 0;
        UnimodularityReport report;
    };
    std::vector<Result> results(jobs.size());
    parallel_for(jobs.size(), [&](size_t i) {
        const Job& job = jobs[i];
        Result res;
        res.pair_id = job.chi->describe() + " x " + job.psi->describe();
        res.k = job.k;
        RationalPoly zr = generalized_R_times_z(job.k, *job.chi, *job.psi, M);
        if (zr.is_zero() || zr.degree() < 2) {
            results[i] = std::move(res); // constant or empty: nothing to locate
            return;
        }
        ComplexPoly poly = generalized_R(job.k, *job.chi, *job.psi, M, 2 * ctx.working_bits());
        res.degenerate = false;
        res.degree = poly.degree();
        std::string id = "generalized_k" + std::to_string(job.k);
        res.report = unimodularity_report(id, poly, ctx, CircleClass::AllRoots);
        results[i] = std::move(res);
    });

    bool any_flag = false;
    long checked = 0;
    ordered_json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = "conjecture";
    ordered_json arr = ordered_json::array();
    std::string text;
    for (const auto& res : results) {
        if (res.degenerate) continue;
        ++checked;
        if (!res.report.verdict) any_flag = true;
        ordered_json j = root_report_to_json(res.report, res.degree, ctx);
        j["pair"] = res.pair_id;
        j["k"] = res.k;
        arr.push_back(std::move(j));
        if (!res.report.verdict)
            text += "FLAG " + res.pair_id + " k=" + std::to_string(res.k) +
                    " max_unit_distance=" + res.report.max_unit_distance.str(4) + "\n";
    }
    doc["checked"] = checked;
    doc["flagged"] = any_flag;
    doc["reports"] = std::move(arr);
    text += "checked " + std::to_string(checked) + " polynomial(s), " +
            (any_flag ? "violations flagged\n" : "all roots on the unit circle\n");
    emit(out, config, doc, text);
    return any_flag ? 1 : 0;
}

} // namespace

std::string cli_schema_version() { return std::to_string(kSchemaVersion); }

int run(const JobConfig& config, std::ostream& out) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.output_path.empty()) {
        file.open(config.output_path);
        if (!file) {
            out << "error: cannot open output file " << config.output_path << "\n";
            return 2;
        }
        sink = &file;
    }
    try {
        switch (config.command) {
            case JobConfig::Command::list: return cmd_list(config, *sink);
            case JobConfig::Command::zeta: return cmd_zeta(config, *sink);
            case JobConfig::Command::verify: return cmd_verify(config, *sink);
            case JobConfig::Command::roots: return cmd_roots(config, *sink);
            case JobConfig::Command::conjecture: return cmd_conjecture(config, *sink);
        }
        out << "error: unknown command\n";
        return 2;
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace zetalab
