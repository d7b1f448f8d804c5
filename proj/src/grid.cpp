#include "kdvd/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>

#include "json.hpp"

namespace kdvd {

namespace {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// FFTW plan creation/destruction is not thread safe; execution is.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

enum class Dir { forward, backward };

// Raw DFT in FFTW index order, unnormalized: out_k = sum_j in_j e^{-+ 2pi i jk/N}.
std::vector<cplx> raw_dft(const std::vector<cplx>& in, Dir dir) {
    const int n = static_cast<int>(in.size());
    std::vector<cplx> src(in), dst(n);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(src.data()),
                                reinterpret_cast<fftw_complex*>(dst.data()),
                                dir == Dir::forward ? FFTW_FORWARD : FFTW_BACKWARD,
                                FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_destroy_plan(plan);
    }
    return dst;
}

} // namespace

GridSpec::GridSpec(double L, int N) : half_width(L), n_points(N) {
    if (!(L > 0.0)) throw parameter_error("GridSpec: half_width must be positive");
    if (!is_pow2(N) || N < 16) throw parameter_error("GridSpec: n_points must be a power of two >= 16");
}

int GridSpec::nearest_index(double xq) const {
    int j = static_cast<int>(std::lround((xq + half_width) / spacing()));
    return std::clamp(j, 0, n_points - 1);
}

void GridFunction::validate() const {
    if (size() != spec.n_points) throw parameter_error("GridFunction: values.length != n_points");
    for (const cplx& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw parameter_error("GridFunction: non-finite sample");
}

GridFunction GridFunction::sample(const GridSpec& s, const std::function<cplx(double)>& f) {
    GridFunction g(s);
    for (int j = 0; j < s.n_points; ++j) g.values[j] = f(s.x(j));
    return g;
}

GridFunction GridFunction::sample_real(const GridSpec& s, const std::function<double(double)>& f) {
    GridFunction g(s);
    for (int j = 0; j < s.n_points; ++j) g.values[j] = cplx(f(s.x(j)), 0.0);
    return g;
}

// fhat(xi_k) = h (-1)^k DFT_k since e^{-i xi_k x_j} = (-1)^k e^{-2pi i jk/N}.
GridFunction forward_transform(const GridFunction& f) {
    f.validate();
    const int n = f.size();
    const double h = f.spec.spacing();
    std::vector<cplx> dft = raw_dft(f.values, Dir::forward);
    GridFunction out(f.spec);
    for (int m = 0; m < n; ++m) {
        int k = m - n / 2;                       // natural index
        int idx = (k + n) % n;                   // FFTW index
        double sgn = (k % 2 == 0) ? 1.0 : -1.0;  // (-1)^k
        out.values[m] = h * sgn * dft[idx];
    }
    return out;
}

GridFunction inverse_transform(const GridFunction& fhat) {
    fhat.validate();
    const int n = fhat.size();
    const double h = fhat.spec.spacing();
    std::vector<cplx> y(n);
    for (int m = 0; m < n; ++m) {
        int k = m - n / 2;
        int idx = (k + n) % n;
        double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        y[idx] = sgn * fhat.values[m];
    }
    std::vector<cplx> idft = raw_dft(y, Dir::backward);
    GridFunction out(fhat.spec);
    const double scale = 1.0 / (h * n); // 1/(2L)
    for (int j = 0; j < n; ++j) out.values[j] = scale * idft[j];
    return out;
}

GridFunction apply_multiplier(const GridFunction& f, const std::function<cplx(double)>& m) {
    f.validate();
    const int n = f.size();
    std::vector<cplx> spec = raw_dft(f.values, Dir::forward);
    for (int idx = 0; idx < n; ++idx) {
        int k = (idx < n / 2) ? idx : idx - n;
        spec[idx] *= m(f.spec.xi(k));
    }
    std::vector<cplx> back = raw_dft(spec, Dir::backward);
    GridFunction out(f.spec);
    const double inv_n = 1.0 / n;
    for (int j = 0; j < n; ++j) out.values[j] = inv_n * back[j];
    return out;
}

GridFunction spectral_derivative(const GridFunction& f) {
    const double nyquist = f.spec.xi(-f.spec.n_points / 2);
    return apply_multiplier(f, [nyquist](double xi) -> cplx {
        if (xi == nyquist) return {0.0, 0.0};
        return {0.0, xi};
    });
}

double norm_l2(const GridFunction& f) {
    f.validate();
    double s = 0.0;
    for (const cplx& v : f.values) s += std::norm(v);
    return std::sqrt(f.spec.spacing() * s);
}

double norm_l2_of_spectrum(const GridFunction& fhat) {
    fhat.validate();
    double s = 0.0;
    for (const cplx& v : fhat.values) s += std::norm(v);
    const double dxi = M_PI / fhat.spec.half_width;
    return std::sqrt(dxi / (2.0 * M_PI) * s);
}

LinfResult norm_linf(const GridFunction& f) {
    f.validate();
    LinfResult r{0.0, f.spec.x(0)};
    double best = -1.0;
    for (int j = 0; j < f.size(); ++j) {
        double a = std::abs(f.values[j]);
        if (a > best) { // strict: ties keep the smallest x
            best = a;
            r.value = a;
            r.argmax_x = f.spec.x(j);
        }
    }
    return r;
}

double weighted_norm_x(const GridFunction& f) {
    f.validate();
    double s = 0.0;
    for (int j = 0; j < f.size(); ++j) {
        double x = f.spec.x(j);
        s += x * x * std::norm(f.values[j]);
    }
    return std::sqrt(f.spec.spacing() * s);
}

BoundaryMassReport boundary_mass(const GridFunction& f) {
    f.validate();
    const int n = f.size();
    const int edge = n / 10;
    const double h = f.spec.spacing();
    BoundaryMassReport r;
    for (int j = 0; j < n; ++j) {
        double m = h * std::norm(f.values[j]);
        r.total_l2 += m;
        if (j < edge || j >= n - edge) r.tail_l2 += m;
    }
    r.tail_fraction = (r.total_l2 > 0.0) ? r.tail_l2 / r.total_l2 : 0.0;
    return r;
}

GridFunction multiply_by_x(const GridFunction& f) {
    f.validate();
    GridFunction out(f.spec);
    for (int j = 0; j < f.size(); ++j) out.values[j] = f.spec.x(j) * f.values[j];
    return out;
}

std::vector<cplx> circular_convolution(const std::vector<cplx>& a, const std::vector<cplx>& w,
                                       double h) {
    if (a.size() != w.size()) throw parameter_error("circular_convolution: size mismatch");
    const int n = static_cast<int>(a.size());
    std::vector<cplx> fa = raw_dft(a, Dir::forward);
    std::vector<cplx> fw = raw_dft(w, Dir::forward);
    for (int k = 0; k < n; ++k) fa[k] *= fw[k];
    std::vector<cplx> out = raw_dft(fa, Dir::backward);
    const double scale = h / n;
    for (cplx& v : out) v *= scale;
    return out;
}

void save_csv(const GridFunction& f, const std::string& path) {
    f.validate();
    std::ofstream os(path);
    if (!os) throw io_error("cannot open for writing: " + path);
    os << "x,re,im\n";
    char buf[96];
    for (int j = 0; j < f.size(); ++j) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", f.spec.x(j),
                      f.values[j].real(), f.values[j].imag());
        os << buf;
    }
    if (!os) throw io_error("write failed: " + path);
    nlohmann::json side;
    side["L"] = f.spec.half_width;
    side["N"] = f.spec.n_points;
    std::ofstream js(path + ".json");
    if (!js) throw io_error("cannot open for writing: " + path + ".json");
    js << side.dump() << "\n";
}

GridFunction load_csv(const std::string& path) {
    std::ifstream js(path + ".json");
    if (!js) throw io_error("missing sidecar: " + path + ".json");
    nlohmann::json side = nlohmann::json::parse(js);
    GridSpec spec(side.at("L").get<double>(), side.at("N").get<int>());
    std::ifstream is(path);
    if (!is) throw io_error("cannot open: " + path);
    std::string line;
    std::getline(is, line); // header
    GridFunction f(spec);
    for (int j = 0; j < spec.n_points; ++j) {
        if (!std::getline(is, line)) throw io_error("short file: " + path);
        double x, re, im;
        if (std::sscanf(line.c_str(), "%lg,%lg,%lg", &x, &re, &im) != 3)
            throw io_error("bad row in " + path + ": " + line);
        f.values[j] = cplx(re, im);
    }
    return f;
}

} // namespace kdvd
