#include "pws/kernels.hpp"

#include <atomic>
#include <mutex>

#ifdef PWS_HAVE_OPENMP
#include <omp.h>
#endif

namespace pws::kernels {

namespace {
std::atomic<bool> g_parallel{true};

PadicNumber conv_entry(const std::vector<PadicNumber>& a, const std::vector<PadicNumber>& b, long d) {
    long A = static_cast<long>(a.size());
    long B = static_cast<long>(b.size());
    long i0 = std::max(0L, d - B + 1);
    long i1 = std::min(A - 1, d);
    PadicNumber s;
    bool set = false;
    for (long i = i0; i <= i1; ++i) {
        PadicNumber t = a[static_cast<size_t>(i)] * b[static_cast<size_t>(d - i)];
        s = set ? s + t : t;
        set = true;
    }
    if (!set) throw Error("convolution entry outside both supports");
    return s;
}
}  // namespace

bool parallel_enabled() {
#ifdef PWS_HAVE_OPENMP
    return g_parallel.load();
#else
    return false;
#endif
}

void set_parallel(bool on) { g_parallel.store(on); }

void convolve_serial(const std::vector<PadicNumber>& a, const std::vector<PadicNumber>& b,
                     std::vector<PadicNumber>& out, long out_len) {
    out.assign(static_cast<size_t>(out_len), PadicNumber());
    for (long d = 0; d < out_len; ++d) out[static_cast<size_t>(d)] = conv_entry(a, b, d);
}

void convolve_parallel(const std::vector<PadicNumber>& a, const std::vector<PadicNumber>& b,
                       std::vector<PadicNumber>& out, long out_len) {
    out.assign(static_cast<size_t>(out_len), PadicNumber());
#ifdef PWS_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long d = 0; d < out_len; ++d) out[static_cast<size_t>(d)] = conv_entry(a, b, d);
}

void convolve(const std::vector<PadicNumber>& a, const std::vector<PadicNumber>& b,
              std::vector<PadicNumber>& out, long out_len) {
    if (parallel_enabled() && out_len >= kParallelThreshold)
        convolve_parallel(a, b, out, out_len);
    else
        convolve_serial(a, b, out, out_len);
}

std::vector<std::vector<mpz_class>> pascal_rows(long n) {
    std::vector<std::vector<mpz_class>> rows(static_cast<size_t>(n));
    for (long k = 0; k < n; ++k) {
        auto& row = rows[static_cast<size_t>(k)];
        row.assign(static_cast<size_t>(k + 1), mpz_class(0));
        row[0] = 1;
        row[static_cast<size_t>(k)] = 1;
        for (long j = 1; j < k; ++j)
            row[static_cast<size_t>(j)] =
                rows[static_cast<size_t>(k - 1)][static_cast<size_t>(j - 1)] + rows[static_cast<size_t>(k - 1)][static_cast<size_t>(j)];
    }
    return rows;
}

std::shared_ptr<const std::vector<std::vector<mpz_class>>> pascal_cache(long n) {
    static std::mutex mu;
    static std::shared_ptr<const std::vector<std::vector<mpz_class>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (!cache || static_cast<long>(cache->size()) < n) {
        long target = std::max(n, cache ? static_cast<long>(2 * cache->size()) : 64L);
        cache = std::make_shared<const std::vector<std::vector<mpz_class>>>(pascal_rows(target));
    }
    return cache;
}

namespace {
PadicNumber u_entry(const std::vector<PadicNumber>& a, long j, const std::vector<std::vector<mpz_class>>& pascal) {
    long K = static_cast<long>(a.size());
    PadicNumber s;
    bool set = false;
    for (long k = j; k < K; ++k) {
        mpz_class c = pascal[static_cast<size_t>(k)][static_cast<size_t>(j)];
        if ((k - j) % 2) c = -c;
        PadicNumber t = a[static_cast<size_t>(k)].mul_exact(c);
        s = set ? s + t : t;
        set = true;
    }
    return set ? s : PadicNumber();
}

PadicNumber pi_entry(const std::vector<PadicNumber>& b, long k, const std::vector<std::vector<mpz_class>>& pascal) {
    long K = static_cast<long>(b.size());
    PadicNumber s;
    bool set = false;
    for (long m = k; m < K; ++m) {
        PadicNumber t = b[static_cast<size_t>(m)].mul_exact(pascal[static_cast<size_t>(m)][static_cast<size_t>(k)]);
        s = set ? s + t : t;
        set = true;
    }
    return set ? s : PadicNumber();
}
}  // namespace

void pi_to_u_serial(const std::vector<PadicNumber>& a, std::vector<PadicNumber>& b,
                    const std::vector<std::vector<mpz_class>>& pascal) {
    long K = static_cast<long>(a.size());
    b.assign(a.size(), PadicNumber());
    for (long j = 0; j < K; ++j) b[static_cast<size_t>(j)] = u_entry(a, j, pascal);
}

void pi_to_u_parallel(const std::vector<PadicNumber>& a, std::vector<PadicNumber>& b,
                      const std::vector<std::vector<mpz_class>>& pascal) {
    long K = static_cast<long>(a.size());
    b.assign(a.size(), PadicNumber());
#ifdef PWS_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (long j = 0; j < K; ++j) b[static_cast<size_t>(j)] = u_entry(a, j, pascal);
}

void u_to_pi_serial(const std::vector<PadicNumber>& b, std::vector<PadicNumber>& a,
                    const std::vector<std::vector<mpz_class>>& pascal) {
    long K = static_cast<long>(b.size());
    a.assign(b.size(), PadicNumber());
    for (long k = 0; k < K; ++k) a[static_cast<size_t>(k)] = pi_entry(b, k, pascal);
}

void u_to_pi_parallel(const std::vector<PadicNumber>& b, std::vector<PadicNumber>& a,
                      const std::vector<std::vector<mpz_class>>& pascal) {
    long K = static_cast<long>(b.size());
    a.assign(b.size(), PadicNumber());
#ifdef PWS_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (long k = 0; k < K; ++k) a[static_cast<size_t>(k)] = pi_entry(b, k, pascal);
}

void pi_to_u(const std::vector<PadicNumber>& a, std::vector<PadicNumber>& b,
             const std::vector<std::vector<mpz_class>>& pascal) {
    if (parallel_enabled() && static_cast<long>(a.size()) >= kParallelThreshold)
        pi_to_u_parallel(a, b, pascal);
    else
        pi_to_u_serial(a, b, pascal);
}

void u_to_pi(const std::vector<PadicNumber>& b, std::vector<PadicNumber>& a,
             const std::vector<std::vector<mpz_class>>& pascal) {
    if (parallel_enabled() && static_cast<long>(b.size()) >= kParallelThreshold)
        u_to_pi_parallel(b, a, pascal);
    else
        u_to_pi_serial(b, a, pascal);
}

}  // namespace pws::kernels
