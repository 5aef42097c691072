#include "kcon/wavelet.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace kcon {

namespace {

constexpr double kOrthoTol = 1e-10;

double shifted_dot(const std::vector<double>& a, const std::vector<double>& b, int shift) {
  // sum_k a[k] * b[k + shift], zero outside
  double acc = 0.0;
  const int n = static_cast<int>(a.size());
  for (int k = 0; k < n; ++k) {
    int j = k + shift;
    if (j >= 0 && j < n) acc += a[k] * b[j];
  }
  return acc;
}

void check_orthonormal(const std::string& name, const std::vector<double>& lo,
                       const std::vector<double>& hi) {
  const int half = static_cast<int>(lo.size()) / 2;
  if (std::fabs(shifted_dot(lo, lo, 0) - 1.0) > kOrthoTol)
    throw InvalidKernelError("kernel '" + name + "': lowpass norm is not 1");
  if (std::fabs(shifted_dot(hi, hi, 0) - 1.0) > kOrthoTol)
    throw InvalidKernelError("kernel '" + name + "': highpass norm is not 1");
  for (int m = 1; m < half; ++m) {
    if (std::fabs(shifted_dot(lo, lo, 2 * m)) > kOrthoTol)
      throw InvalidKernelError("kernel '" + name + "': lowpass not orthogonal to its shift");
    if (std::fabs(shifted_dot(hi, hi, 2 * m)) > kOrthoTol)
      throw InvalidKernelError("kernel '" + name + "': highpass not orthogonal to its shift");
  }
  for (int m = -(half - 1); m < half; ++m) {
    if (std::fabs(shifted_dot(lo, hi, 2 * m)) > kOrthoTol)
      throw InvalidKernelError("kernel '" + name + "': lowpass/highpass not orthogonal");
  }
}

// Replicate the last row/column so both dimensions are even.
Image pad_even(const Image& img) {
  const int h2 = img.height + (img.height & 1);
  const int w2 = img.width + (img.width & 1);
  if (h2 == img.height && w2 == img.width) return img;
  Image out;
  out.height = h2;
  out.width = w2;
  out.pixels.resize(static_cast<std::size_t>(h2) * w2);
  for (int r = 0; r < h2; ++r) {
    const int sr = r < img.height ? r : img.height - 1;
    for (int c = 0; c < w2; ++c) {
      const int sc = c < img.width ? c : img.width - 1;
      out.at(r, c) = img.at(sr, sc);
    }
  }
  return out;
}

// Transpose of pad_even: folds the replicated row/column back by addition.
Image fold_unpad(const Image& full, int out_h, int out_w) {
  if (full.height == out_h && full.width == out_w) return full;
  Image out;
  out.height = out_h;
  out.width = out_w;
  out.pixels.assign(static_cast<std::size_t>(out_h) * out_w, 0.0);
  for (int r = 0; r < full.height; ++r) {
    const int tr = r < out_h ? r : out_h - 1;
    for (int c = 0; c < full.width; ++c) {
      const int tc = c < out_w ? c : out_w - 1;
      out.at(tr, tc) += full.at(r, c);
    }
  }
  return out;
}

// Filter + downsample by 2 along the width: y[r][k] = sum_j f[j] x[r][(2k+j) mod w].
Image down_rows(const Image& x, const std::vector<double>& f) {
  const int L = static_cast<int>(f.size());
  Image y;
  y.height = x.height;
  y.width = x.width / 2;
  y.pixels.resize(static_cast<std::size_t>(y.height) * y.width);
  for (int r = 0; r < x.height; ++r) {
    for (int k = 0; k < y.width; ++k) {
      double acc = 0.0;
      for (int j = 0; j < L; ++j) {
        int c = 2 * k + j;
        if (c >= x.width) c -= x.width;  // L <= w, so one wrap suffices
        acc += f[j] * x.at(r, c);
      }
      y.at(r, k) = acc;
    }
  }
  return y;
}

// Same along the height.
Image down_cols(const Image& x, const std::vector<double>& f) {
  const int L = static_cast<int>(f.size());
  Image y;
  y.height = x.height / 2;
  y.width = x.width;
  y.pixels.resize(static_cast<std::size_t>(y.height) * y.width);
  for (int k = 0; k < y.height; ++k) {
    for (int c = 0; c < x.width; ++c) {
      double acc = 0.0;
      for (int j = 0; j < L; ++j) {
        int r = 2 * k + j;
        if (r >= x.height) r -= x.height;
        acc += f[j] * x.at(r, c);
      }
      y.at(k, c) = acc;
    }
  }
  return y;
}

// Adjoint of down_rows: out[r][(2k+j) mod w] += f[j] y[r][k].
void up_rows_add(const Image& y, const std::vector<double>& f, Image& out) {
  const int L = static_cast<int>(f.size());
  for (int r = 0; r < y.height; ++r) {
    for (int k = 0; k < y.width; ++k) {
      const double v = y.at(r, k);
      for (int j = 0; j < L; ++j) {
        int c = 2 * k + j;
        if (c >= out.width) c -= out.width;
        out.at(r, c) += f[j] * v;
      }
    }
  }
}

void up_cols_add(const Image& y, const std::vector<double>& f, Image& out) {
  const int L = static_cast<int>(f.size());
  for (int k = 0; k < y.height; ++k) {
    for (int c = 0; c < y.width; ++c) {
      const double v = y.at(k, c);
      for (int j = 0; j < L; ++j) {
        int r = 2 * k + j;
        if (r >= out.height) r -= out.height;
        out.at(r, c) += f[j] * v;
      }
    }
  }
}

void check_kernel_fits(const FilterKernel& kernel, int h2, int w2) {
  const int L = static_cast<int>(kernel.lowpass.size());
  if (L > h2 || L > w2)
    throw KernelTooLongError("kernel '" + kernel.name + "' (length " + std::to_string(L) +
                             ") exceeds padded image side " + std::to_string(h2) + "x" +
                             std::to_string(w2));
}

void check_bank(const FilterBank& bank) {
  if (bank.kernels.empty()) throw BankConfigError("filter bank has no kernels");
  std::set<std::string> names;
  for (const auto& k : bank.kernels)
    if (!names.insert(k.name).second)
      throw BankConfigError("duplicate kernel name in bank: " + k.name);
}

}  // namespace

FilterKernel make_kernel(const std::string& name, std::vector<double> lowpass) {
  const int L = static_cast<int>(lowpass.size());
  if (L < 2 || L % 2 != 0)
    throw InvalidKernelError("kernel '" + name + "': length must be even and >= 2, got " +
                             std::to_string(L));
  for (double v : lowpass)
    if (!std::isfinite(v)) throw InvalidKernelError("kernel '" + name + "': non-finite coefficient");
  FilterKernel k;
  k.name = name;
  k.lowpass = std::move(lowpass);
  k.highpass.resize(L);
  for (int j = 0; j < L; ++j) {
    double v = k.lowpass[L - 1 - j];
    k.highpass[j] = (j % 2 == 0) ? v : -v;
  }
  check_orthonormal(name, k.lowpass, k.highpass);
  return k;
}

FilterBank make_bank(const std::vector<std::string>& names, bool include_ll) {
  FilterBank bank;
  bank.include_ll = include_ll;
  for (const auto& n : names) bank.kernels.push_back(builtin_kernel(n));
  check_bank(bank);
  return bank;
}

FilterBank load_bank_file(const std::string& path, bool include_ll) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open bank file: " + path);
  FilterBank bank;
  bank.include_ll = include_ll;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) continue;  // blank line
    std::vector<double> coeffs;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        coeffs.push_back(v);
      } catch (const std::exception&) {
        throw BankConfigError(path + ":" + std::to_string(lineno) + ": bad coefficient '" + tok + "'");
      }
    }
    if (coeffs.empty())
      throw BankConfigError(path + ":" + std::to_string(lineno) + ": kernel '" + name +
                            "' has no coefficients");
    bank.kernels.push_back(make_kernel(name, std::move(coeffs)));
  }
  check_bank(bank);
  return bank;
}

std::array<Image, 4> dwt2_forward(const Image& img, const FilterKernel& kernel) {
  validate_image(img);
  const Image p = pad_even(img);
  check_kernel_fits(kernel, p.height, p.width);
  const Image lo = down_rows(p, kernel.lowpass);
  const Image hi = down_rows(p, kernel.highpass);
  std::array<Image, 4> planes;
  planes[kLL] = down_cols(lo, kernel.lowpass);
  planes[kLH] = down_cols(lo, kernel.highpass);
  planes[kHL] = down_cols(hi, kernel.lowpass);
  planes[kHH] = down_cols(hi, kernel.highpass);
  return planes;
}

Image dwt2_adjoint(const std::array<Image, 4>& planes, const FilterKernel& kernel,
                   int out_h, int out_w) {
  if (out_h < 2 || out_w < 2)
    throw InvalidArgumentError("adjoint target dimensions must be at least 2x2");
  const int h2 = out_h + (out_h & 1);
  const int w2 = out_w + (out_w & 1);
  check_kernel_fits(kernel, h2, w2);
  const int ph = h2 / 2, pw = w2 / 2;
  for (const Image& pl : planes)
    if (pl.height != ph || pl.width != pw)
      throw DimensionMismatchError("plane is " + std::to_string(pl.height) + "x" +
                                   std::to_string(pl.width) + ", expected " + std::to_string(ph) +
                                   "x" + std::to_string(pw));

  Image lo_acc, hi_acc;
  lo_acc.height = h2;
  lo_acc.width = pw;
  lo_acc.pixels.assign(static_cast<std::size_t>(h2) * pw, 0.0);
  hi_acc = lo_acc;
  up_cols_add(planes[kLL], kernel.lowpass, lo_acc);
  up_cols_add(planes[kLH], kernel.highpass, lo_acc);
  up_cols_add(planes[kHL], kernel.lowpass, hi_acc);
  up_cols_add(planes[kHH], kernel.highpass, hi_acc);

  Image full;
  full.height = h2;
  full.width = w2;
  full.pixels.assign(static_cast<std::size_t>(h2) * w2, 0.0);
  up_rows_add(lo_acc, kernel.lowpass, full);
  up_rows_add(hi_acc, kernel.highpass, full);
  return fold_unpad(full, out_h, out_w);
}

SubbandSet decompose(const Image& img, const FilterBank& bank) {
  validate_image(img);
  check_bank(bank);
  SubbandSet set;
  set.source_height = img.height;
  set.source_width = img.width;
  for (const auto& kernel : bank.kernels) {
    if (!set.bank_id.empty()) set.bank_id += ",";
    set.bank_id += kernel.name;
    auto planes = dwt2_forward(img, kernel);
    for (int p = 0; p < 4; ++p)
      set.subbands.push_back(Subband{kernel.name, kPlaneNames[p], std::move(planes[p])});
  }
  return set;
}

}  // namespace kcon
