#include "flagk.h"

#include "verify.hpp"

#include <cstdlib>
#include <cstring>

struct flagk_ctx {
    flagk::RootSystem rs;
    flagk::WeylGroup wg;
    flagk_ctx(char t, int rank) : rs(t, rank), wg(rs) {}
};

namespace {

using namespace flagk;

thread_local std::string g_error;

int fail(int code, const std::string& msg) {
    g_error = msg;
    return code;
}

template <class F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        return fail(FLAGK_ERR_ARGUMENT, e.what());
    } catch (const std::length_error& e) {
        return fail(FLAGK_ERR_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(FLAGK_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(FLAGK_ERR_INTERNAL, "unknown error");
    }
}

int emit(char** out, const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) return fail(FLAGK_ERR_INTERNAL, "out of memory");
    std::memcpy(p, s.c_str(), s.size() + 1);
    *out = p;
    return FLAGK_OK;
}

int emit(char** out, const Json& j) { return emit(out, j.dump(2) + "\n"); }

IVec lambda_in(const long long* lambda, size_t len) {
    if (!lambda && len > 0) throw std::invalid_argument("lambda is null");
    return IVec(lambda, lambda + len);
}

std::vector<int> word_in(const int* word, size_t len, int rank) {
    if (!word && len > 0) throw std::invalid_argument("word is null");
    std::vector<int> out;
    out.reserve(len);
    for (size_t i = 0; i < len; ++i) {
        if (word[i] < 1 || word[i] > rank)
            throw std::invalid_argument("word index out of range 1.." +
                                        std::to_string(rank));
        out.push_back(word[i] - 1);
    }
    return out;
}

PathModel model_for(flagk_ctx* ctx, const long long* lambda, size_t len) {
    IVec lam = lambda_in(lambda, len);
    if (static_cast<int>(lam.size()) != ctx->rs.rank())
        throw std::invalid_argument("lambda length must equal the rank");
    return PathModel(ctx->wg, lam);
}

}  // namespace

extern "C" {

const char* flagk_version(void) { return "0.1.0"; }

const char* flagk_last_error(void) { return g_error.c_str(); }

int flagk_ctx_new(const char* type, int rank, flagk_ctx** out) {
    if (!type || !out) return fail(FLAGK_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        if (std::strlen(type) != 1)
            throw std::invalid_argument("type must be a single letter A..G");
        *out = new flagk_ctx(type[0], rank);
        return FLAGK_OK;
    });
}

void flagk_ctx_free(flagk_ctx* ctx) { delete ctx; }

int flagk_roots_json(flagk_ctx* ctx, char** out) {
    if (!ctx || !out) return fail(FLAGK_ERR_ARGUMENT, "null argument");
    return guarded([&] { return emit(out, roots_json(ctx->rs)); });
}

int flagk_weyl_json(flagk_ctx* ctx, char** out) {
    if (!ctx || !out) return fail(FLAGK_ERR_ARGUMENT, "null argument");
    return guarded([&] { return emit(out, weyl_group_json(ctx->wg)); });
}

int flagk_element_json(flagk_ctx* ctx, const int* word, size_t word_len, char** out) {
    if (!ctx || !out) return fail(FLAGK_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        return emit(out, weyl_element_json(ctx->wg,
                                           word_in(word, word_len, ctx->rs.rank())));
    });
}

int flagk_character_json(flagk_ctx* ctx, const long long* lambda, size_t lambda_len,
                         char** out) {
    if (!ctx || !out) return fail(FLAGK_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        PathModel pm = model_for(ctx, lambda, lambda_len);
        return emit(out, character_json(pm));
    });
}

int flagk_paths_json(flagk_ctx* ctx, const long long* lambda, size_t lambda_len,
                     char** out) {
    if (!ctx || !out) return fail(FLAGK_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        PathModel pm = model_for(ctx, lambda, lambda_len);
        return emit(out, paths_json(pm));
    });
}

int flagk_paths_dot(flagk_ctx* ctx, const long long* lambda, size_t lambda_len,
                    char** out) {
    if (!ctx || !out) return fail(FLAGK_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        PathModel pm = model_for(ctx, lambda, lambda_len);
        return emit(out, crystal_dot(pm));
    });
}

int flagk_expand_json(flagk_ctx* ctx, const long long* lambda, size_t lambda_len,
                      const int* word, size_t word_len, char** out) {
    if (!ctx || !out) return fail(FLAGK_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        PathModel pm = model_for(ctx, lambda, lambda_len);
        return emit(out, expand_json(pm, word_in(word, word_len, ctx->rs.rank())));
    });
}

int flagk_verify_json(const char* suite, unsigned long long seed, char** out) {
    if (!suite || !out) return fail(FLAGK_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        Report r = run_suite(suite, seed);
        int rc = emit(out, report_to_json(r));
        if (rc != FLAGK_OK) return rc;
        if (!r.ok()) return fail(FLAGK_ERR_VERIFY, "suite " + r.suite + " failed");
        return static_cast<int>(FLAGK_OK);
    });
}

void flagk_string_free(char* s) { std::free(s); }

}  // extern "C"
