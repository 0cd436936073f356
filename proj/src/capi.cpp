#include "excseq.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "jsonio.hpp"

using namespace excseq;

struct excseq_quiver {
    Quiver q;
};
struct excseq_module {
    StringModule m;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename F>
excseq_status guarded(F&& f) {
    try {
        f();
        g_last_error.clear();
        return EXCSEQ_OK;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return EXCSEQ_ERR_NOMEM;
    } catch (const std::exception& e) {
        set_error(e.what());
        return EXCSEQ_ERR_INVALID;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* excseq_version(void) { return kLibraryVersion; }
const char* excseq_last_error(void) { return g_last_error.c_str(); }

excseq_status excseq_quiver_new(int n, const char* signs, excseq_quiver** out) {
    if (!signs || !out) {
        set_error("null argument");
        return EXCSEQ_ERR_INVALID;
    }
    *out = nullptr;
    return guarded([&] { *out = new excseq_quiver{make_quiver(n, std::string(signs))}; });
}

void excseq_quiver_free(excseq_quiver* q) { delete q; }

int excseq_quiver_order(const excseq_quiver* q) { return q ? q->q.n : -1; }
int excseq_quiver_inner_points(const excseq_quiver* q) { return q ? q->q.inner_points() : -1; }
int excseq_quiver_outer_points(const excseq_quiver* q) { return q ? q->q.outer_points() : -1; }

char excseq_quiver_lifted_sign(const excseq_quiver* q, long long k) {
    return q ? sign_char(q->q.lifted_sign(k)) : '?';
}

int excseq_quiver_vertex_boundary(const excseq_quiver* q, int v) {
    if (!q || v < 0 || v >= q->q.n) return -1;
    return q->q.boundary_of_vertex(v) == Boundary::outer ? 1 : 0;
}

excseq_status excseq_quiver_opposite(const excseq_quiver* q, excseq_quiver** out) {
    if (!q || !out) {
        set_error("null argument");
        return EXCSEQ_ERR_INVALID;
    }
    *out = nullptr;
    return guarded([&] { *out = new excseq_quiver{opposite(q->q)}; });
}

excseq_status excseq_module_new(const excseq_quiver* q, int i, int j, long long l,
                                excseq_module** out) {
    if (!q || !out) {
        set_error("null argument");
        return EXCSEQ_ERR_INVALID;
    }
    *out = nullptr;
    return guarded([&] { *out = new excseq_module{from_triple(q->q, i, j, l)}; });
}

void excseq_module_free(excseq_module* m) { delete m; }

void excseq_module_triple(const excseq_module* m, int* i, int* j, long long* l) {
    if (!m) return;
    Triple t = to_triple(m->m);
    if (i) *i = t.i;
    if (j) *j = t.j;
    if (l) *l = t.l;
}

void excseq_module_lift(const excseq_module* m, long long* lo, long long* hi) {
    if (!m) return;
    if (lo) *lo = m->m.lift_lo();
    if (hi) *hi = m->m.lift_hi();
}

long long excseq_module_length(const excseq_module* m) { return m ? m->m.length : -1; }
int excseq_module_class(const excseq_module* m) {
    return m ? static_cast<int>(classify(m->m)) : -1;
}
int excseq_module_is_exceptional(const excseq_module* m) {
    return m ? is_exceptional(m->m) : -1;
}
int excseq_module_is_projective(const excseq_module* m) {
    return m ? is_projective(m->m) : -1;
}
int excseq_module_is_injective(const excseq_module* m) { return m ? is_injective(m->m) : -1; }

excseq_status excseq_module_dimension_vector(const excseq_module* m, long long* out) {
    if (!m || !out) {
        set_error("null argument");
        return EXCSEQ_ERR_INVALID;
    }
    auto d = dimension_vector(m->m);
    for (size_t v = 0; v < d.size(); ++v) out[v] = d[v];
    return EXCSEQ_OK;
}

long long excseq_module_quasi_length(const excseq_module* m) {
    if (!m) return -1;
    try {
        return quasi_length(m->m);
    } catch (const std::exception& e) {
        set_error(e.what());
        return -1;
    }
}

excseq_status excseq_module_tau(const excseq_module* m, excseq_module** out) {
    if (!m || !out) {
        set_error("null argument");
        return EXCSEQ_ERR_INVALID;
    }
    *out = nullptr;
    return guarded([&] {
        auto t = tau(m->m);
        if (t) *out = new excseq_module{*t};
    });
}
excseq_status excseq_module_tau_inv(const excseq_module* m, excseq_module** out) {
    if (!m || !out) {
        set_error("null argument");
        return EXCSEQ_ERR_INVALID;
    }
    *out = nullptr;
    return guarded([&] {
        auto t = tau_inv(m->m);
        if (t) *out = new excseq_module{*t};
    });
}

long long excseq_dim_hom(const excseq_module* m, const excseq_module* n) {
    if (!m || !n) return -1;
    try {
        return dim_hom(m->m, n->m);
    } catch (const std::exception& e) {
        set_error(e.what());
        return -1;
    }
}

long long excseq_dim_ext(const excseq_module* m, const excseq_module* n) {
    if (!m || !n) return -1;
    try {
        return dim_ext(m->m, n->m);
    } catch (const std::exception& e) {
        set_error(e.what());
        return -1;
    }
}

long long excseq_dim_hom_linear_algebra(const excseq_module* m, const excseq_module* n) {
    if (!m || !n) return -1;
    try {
        return dim_hom_linear_algebra(m->m, n->m);
    } catch (const std::exception& e) {
        set_error(e.what());
        return -1;
    }
}

int excseq_is_exceptional_pair(const excseq_module* u, const excseq_module* v) {
    if (!u || !v) return -1;
    try {
        return is_exceptional_pair(u->m, v->m);
    } catch (const std::exception& e) {
        set_error(e.what());
        return -1;
    }
}

int excseq_pair_relation(const excseq_module* u, const excseq_module* v) {
    if (!u || !v) return -1;
    try {
        return static_cast<int>(pair_relation(u->m, v->m));
    } catch (const std::exception& e) {
        set_error(e.what());
        return -1;
    }
}

long long excseq_count_families(const excseq_quiver* q) {
    if (!q) return -1;
    try {
        return count_families(q->q);
    } catch (const std::exception& e) {
        set_error(e.what());
        return -1;
    }
}

excseq_status excseq_run_json(const char* request, char** out) {
    if (!request || !out) {
        set_error("null argument");
        return EXCSEQ_ERR_INVALID;
    }
    *out = nullptr;
    RunResult r = run_request(request);
    if (!r.output.empty()) {
        *out = dup_string(r.output);
        if (!*out) {
            set_error("out of memory");
            return EXCSEQ_ERR_NOMEM;
        }
    }
    set_error(r.error);
    if (r.status == 0) return EXCSEQ_OK;
    return r.status == 2 ? EXCSEQ_ERR_VIOLATION : EXCSEQ_ERR_INVALID;
}

void excseq_string_free(char* s) { std::free(s); }

}  // extern "C"
