#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace dgbo::detail {
namespace {

struct Plans {
    fftw_plan forward = nullptr;
    fftw_plan backward = nullptr;
};

std::mutex& planner_mutex() {
    static std::mutex mu;
    return mu;
}

// Plans assume SIMD-aligned arrays; callers go through Workspace.
const Plans& plans_for(std::size_t n) {
    static std::map<std::size_t, Plans> cache;
    std::lock_guard<std::mutex> lock(planner_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    int len = static_cast<int>(n);
    double* re = fftw_alloc_real(n);
    fftw_complex* co = fftw_alloc_complex(n / 2 + 1);
    Plans p;
    p.forward = fftw_plan_dft_r2c_1d(len, re, co, FFTW_ESTIMATE);
    p.backward = fftw_plan_dft_c2r_1d(len, co, re, FFTW_ESTIMATE | FFTW_DESTROY_INPUT);
    fftw_free(re);
    fftw_free(co);
    return cache.emplace(n, p).first->second;
}

struct FftwFree {
    void operator()(void* p) const { fftw_free(p); }
};

// Per-thread aligned buffers, grown on demand.
struct Workspace {
    std::unique_ptr<double, FftwFree> real;
    std::unique_ptr<fftw_complex, FftwFree> spec;
    std::size_t cap = 0;

    void reserve(std::size_t n) {
        if (n <= cap) return;
        real.reset(fftw_alloc_real(n));
        spec.reset(fftw_alloc_complex(n / 2 + 1));
        cap = n;
    }
};

Workspace& workspace(std::size_t n) {
    thread_local Workspace ws;
    ws.reserve(n);
    return ws;
}

} // namespace

void r2c(std::size_t n, const double* in, std::complex<double>* out) {
    const Plans& p = plans_for(n);
    Workspace& ws = workspace(n);
    std::copy(in, in + n, ws.real.get());
    fftw_execute_dft_r2c(p.forward, ws.real.get(), ws.spec.get());
    const auto* src = reinterpret_cast<const std::complex<double>*>(ws.spec.get());
    std::copy(src, src + n / 2 + 1, out);
}

void c2r(std::size_t n, const std::complex<double>* in, double* out) {
    const Plans& p = plans_for(n);
    Workspace& ws = workspace(n);
    std::copy(in, in + n / 2 + 1, reinterpret_cast<std::complex<double>*>(ws.spec.get()));
    fftw_execute_dft_c2r(p.backward, ws.spec.get(), ws.real.get());
    std::copy(ws.real.get(), ws.real.get() + n, out);
}

} // namespace dgbo::detail
