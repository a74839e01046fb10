#include "peakpoly/peakpoly.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <new>
#include <string>

#include "peakpoly/engine.hpp"
#include "peakpoly/errors.hpp"
#include "peakpoly/intpoly.hpp"
#include "peakpoly/perm.hpp"
#include "peakpoly/serialize.hpp"
#include "peakpoly/verify.hpp"

using namespace peakpoly;

struct pp_context {
    int enumeration_cap = kDefaultEnumerationCap;
    std::shared_ptr<PolynomialCache> cache = std::make_shared<PolynomialCache>();

    PeakEngine engine() const { return PeakEngine(cache); }
};

struct pp_poly {
    BinomialPolynomial value;
};

struct pp_table {
    DifferenceTable value;
};

struct pp_report {
    VerificationReport value;
};

struct pp_sweep {
    SweepSummary value;
};

namespace {

thread_local std::string last_error;

template <typename F>
pp_status guarded(F&& body)
{
    last_error.clear();
    try {
        body();
        return PP_OK;
    } catch (const InadmissibleSet& e) {
        last_error = e.what();
        return PP_ERR_INADMISSIBLE;
    } catch (const ResourceLimit& e) {
        last_error = e.what();
        return PP_ERR_RESOURCE_LIMIT;
    } catch (const Disagreement& e) {
        last_error = e.what();
        return PP_ERR_DISAGREEMENT;
    } catch (const InvalidArgument& e) {
        last_error = e.what();
        return PP_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return PP_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return PP_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return PP_ERR_INTERNAL;
    }
}

void require(const void* p, const char* what)
{
    if (p == nullptr) {
        throw InvalidArgument(std::string(what) + " must not be null");
    }
}

char* dup_string(const std::string& s)
{
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

PeakSet to_set(const int* set, size_t len)
{
    if (len > 0) {
        require(set, "set");
    }
    return PeakSet(std::vector<int>(set, set + len));
}

Format to_format(pp_format f)
{
    switch (f) {
    case PP_FORMAT_TEXT:
        return Format::Text;
    case PP_FORMAT_JSON:
        return Format::Json;
    case PP_FORMAT_CSV:
        return Format::Csv;
    }
    throw InvalidArgument("unknown output format");
}

int cap_from_environment()
{
    const char* env = std::getenv("PEAKPOLY_ENUM_CAP");
    if (env == nullptr || *env == '\0') {
        return kDefaultEnumerationCap;
    }
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > kMaxEnumerationCap) {
        throw InvalidArgument("PEAKPOLY_ENUM_CAP must be an integer in 1.." + std::to_string(kMaxEnumerationCap));
    }
    return static_cast<int>(v);
}

std::string list_permutations(int n, int cap, Format format)
{
    const auto perms = all_permutations(n, cap);
    std::string out;
    if (format == Format::Json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& p : perms) {
            rows.push_back({{"permutation", std::vector<int>(p.entries().begin(), p.entries().end())},
                            {"peak_set", peak_set(p).positions()}});
        }
        return rows.dump() + "\n";
    }
    if (format == Format::Csv) {
        out = "permutation,peak_set\n";
    }
    for (const auto& p : perms) {
        const auto peaks = peak_set(p).to_string();
        if (format == Format::Csv) {
            out += p.to_string() + ",\"" + peaks + "\"\n";
        } else {
            out += p.to_string() + " " + peaks + "\n";
        }
    }
    return out;
}

} // namespace

extern "C" {

const char* pp_status_string(pp_status status)
{
    switch (status) {
    case PP_OK:
        return "ok";
    case PP_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case PP_ERR_INADMISSIBLE:
        return "inadmissible peak set";
    case PP_ERR_DISAGREEMENT:
        return "cross-check disagreement";
    case PP_ERR_RESOURCE_LIMIT:
        return "resource limit exceeded";
    case PP_ERR_IO:
        return "i/o error";
    case PP_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char* pp_last_error(void) { return last_error.c_str(); }

void pp_string_free(char* s) { std::free(s); }

pp_status pp_context_create(pp_context** out)
{
    return guarded([&] {
        require(out, "out");
        auto ctx = std::make_unique<pp_context>();
        ctx->enumeration_cap = cap_from_environment();
        *out = ctx.release();
    });
}

void pp_context_destroy(pp_context* ctx) { delete ctx; }

pp_status pp_context_set_enumeration_cap(pp_context* ctx, int cap)
{
    return guarded([&] {
        require(ctx, "context");
        if (cap < 1 || cap > kMaxEnumerationCap) {
            throw InvalidArgument("enumeration cap must be in 1.." + std::to_string(kMaxEnumerationCap));
        }
        ctx->enumeration_cap = cap;
    });
}

int pp_context_enumeration_cap(const pp_context* ctx) { return ctx ? ctx->enumeration_cap : 0; }

pp_status pp_context_set_cache_limit(pp_context* ctx, size_t max_entries)
{
    return guarded([&] {
        require(ctx, "context");
        ctx->cache = std::make_shared<PolynomialCache>(max_entries);
    });
}

pp_status pp_parse_peak_set(const char* text, int* positions, size_t capacity, size_t* count)
{
    return guarded([&] {
        require(text, "text");
        require(count, "count");
        const auto s = PeakSet::parse(text);
        *count = s.size();
        if (s.size() > capacity) {
            throw InvalidArgument("peak set has " + std::to_string(s.size()) + " positions, buffer holds " +
                                  std::to_string(capacity));
        }
        if (s.size() > 0) {
            require(positions, "positions");
            std::copy(s.positions().begin(), s.positions().end(), positions);
        }
    });
}

pp_status pp_check_admissible(const int* set, size_t len, int* admissible, char** reason)
{
    return guarded([&] {
        require(admissible, "admissible");
        const auto why = admissibility_violation(to_set(set, len));
        *admissible = why.empty() ? 1 : 0;
        if (reason != nullptr) {
            *reason = why.empty() ? nullptr : dup_string(why);
        }
    });
}

pp_status pp_poly_create(pp_context* ctx, const int* set, size_t len, pp_poly** out)
{
    return guarded([&] {
        require(ctx, "context");
        require(out, "out");
        *out = new pp_poly{ctx->engine().peak_polynomial(to_set(set, len))};
    });
}

pp_status pp_poly_from_json(const char* json, pp_poly** out)
{
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        nlohmann::json parsed;
        try {
            parsed = nlohmann::json::parse(json);
        } catch (const nlohmann::json::exception& e) {
            throw InvalidArgument(std::string("malformed JSON: ") + e.what());
        }
        *out = new pp_poly{polynomial_from_json(parsed)};
    });
}

pp_status pp_poly_recenter(const pp_poly* p, long center, pp_poly** out)
{
    return guarded([&] {
        require(p, "polynomial");
        require(out, "out");
        *out = new pp_poly{recenter(p->value, center)};
    });
}

pp_status pp_poly_difference(const pp_poly* p, int order, pp_poly** out)
{
    return guarded([&] {
        require(p, "polynomial");
        require(out, "out");
        *out = new pp_poly{forward_difference(p->value, order)};
    });
}

pp_status pp_poly_evaluate(const pp_poly* p, long x, char** out_decimal)
{
    return guarded([&] {
        require(p, "polynomial");
        require(out_decimal, "out");
        *out_decimal = dup_string(to_decimal(evaluate(p->value, static_cast<std::int64_t>(x))));
    });
}

long pp_poly_center(const pp_poly* p) { return p ? static_cast<long>(p->value.center()) : 0; }

int pp_poly_degree(const pp_poly* p) { return p ? p->value.degree() : -1; }

pp_status pp_poly_render(const pp_poly* p, pp_format format, char** out)
{
    return guarded([&] {
        require(p, "polynomial");
        require(out, "out");
        *out = dup_string(render(p->value, to_format(format)));
    });
}

void pp_poly_destroy(pp_poly* p) { delete p; }

pp_status pp_table_create(const pp_poly* p, int jmax, long kmin, long kmax, pp_table** out)
{
    return guarded([&] {
        require(p, "polynomial");
        require(out, "out");
        *out = new pp_table{difference_table(p->value, jmax, kmin, kmax)};
    });
}

pp_status pp_table_cell(const pp_table* t, int j, long k, char** out_decimal)
{
    return guarded([&] {
        require(t, "table");
        require(out_decimal, "out");
        *out_decimal = dup_string(to_decimal(t->value.at(j, k)));
    });
}

pp_status pp_table_render(const pp_table* t, pp_format format, char** out)
{
    return guarded([&] {
        require(t, "table");
        require(out, "out");
        *out = dup_string(render(t->value, to_format(format)));
    });
}

void pp_table_destroy(pp_table* t) { delete t; }

pp_status pp_count(pp_context* ctx, const int* set, size_t len, int n, pp_count_method method, char** out_decimal)
{
    return guarded([&] {
        require(ctx, "context");
        require(out_decimal, "out");
        const auto s = to_set(set, len);
        const auto engine = ctx->engine();
        BigInt value;
        switch (method) {
        case PP_COUNT_FORMULA:
            value = engine.count_via_formula(s, n);
            break;
        case PP_COUNT_RECURSION:
            value = engine.count_via_recursion(s, n);
            break;
        case PP_COUNT_BRUTE:
            value = big_from_u64(count_bruteforce(s, n, ctx->enumeration_cap));
            break;
        default:
            throw InvalidArgument("unknown count method");
        }
        *out_decimal = dup_string(to_decimal(value));
    });
}

pp_status pp_enumerate(pp_context* ctx, int n, int grouped, pp_format format, char** out)
{
    return guarded([&] {
        require(ctx, "context");
        require(out, "out");
        if (grouped) {
            *out = dup_string(render(enumerate_by_peak_set(n, ctx->enumeration_cap), to_format(format)));
        } else {
            *out = dup_string(list_permutations(n, ctx->enumeration_cap, to_format(format)));
        }
    });
}

pp_status pp_verify(pp_context* ctx, const int* set, size_t len, unsigned checks, int k_span, int n_span,
                    pp_report** out)
{
    return guarded([&] {
        require(ctx, "context");
        require(out, "out");
        if (k_span < 0 || n_span < 0) {
            throw InvalidArgument("k_span and n_span must be >= 0");
        }
        VerifyOptions options;
        options.checks = checks;
        options.k_span = k_span;
        options.n_span = n_span;
        EnumerationTable table(ctx->enumeration_cap);
        *out = new pp_report{verify(ctx->engine(), to_set(set, len), options, table)};
    });
}

int pp_report_passed(const pp_report* r) { return r && r->value.passed() ? 1 : 0; }

pp_status pp_report_render(const pp_report* r, pp_format format, char** out)
{
    return guarded([&] {
        require(r, "report");
        require(out, "out");
        *out = dup_string(render(r->value, to_format(format)));
    });
}

void pp_report_destroy(pp_report* r) { delete r; }

pp_status pp_sweep_run(pp_context* ctx, int m_max, unsigned checks, int jobs, pp_sweep** out)
{
    return guarded([&] {
        require(ctx, "context");
        require(out, "out");
        SweepOptions options;
        options.m_max = m_max;
        options.verify.checks = checks;
        options.workers = jobs;
        options.enumeration_cap = ctx->enumeration_cap;
        *out = new pp_sweep{sweep(ctx->engine(), options)};
    });
}

size_t pp_sweep_sets_checked(const pp_sweep* s) { return s ? s->value.sets_checked : 0; }

size_t pp_sweep_failure_count(const pp_sweep* s) { return s ? s->value.failures.size() : 0; }

double pp_sweep_elapsed_seconds(const pp_sweep* s) { return s ? s->value.elapsed_seconds : 0.0; }

pp_status pp_sweep_render(const pp_sweep* s, pp_format format, char** out)
{
    return guarded([&] {
        require(s, "sweep");
        require(out, "out");
        *out = dup_string(render(s->value, to_format(format)));
    });
}

void pp_sweep_destroy(pp_sweep* s) { delete s; }

pp_status pp_write_file_atomic(const char* path, const char* contents)
{
    pp_status status = guarded([&] {
        require(path, "path");
        require(contents, "contents");
        const std::filesystem::path target(path);
        auto tmp = target;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out << contents;
            out.flush();
            if (!out) {
                throw std::runtime_error("cannot write " + tmp.string());
            }
        }
        std::error_code ec;
        std::filesystem::rename(tmp, target, ec);
        if (ec) {
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("cannot rename onto " + target.string());
        }
    });
    return status == PP_ERR_INTERNAL ? PP_ERR_IO : status;
}

} // extern "C"
