#pragma once

#include <array>
#include <string>
#include <vector>

#include "kcon/image.hpp"

namespace kcon {

// Orthonormal separable wavelet kernel. highpass is the quadrature mirror of
// lowpass: g[j] = (-1)^j h[L-1-j].
struct FilterKernel {
  std::string name;
  std::vector<double> lowpass;
  std::vector<double> highpass;
};

// Validates even length >= 2, unit norms, and orthogonality under all even
// shifts (tolerance 1e-10); derives the highpass.
FilterKernel make_kernel(const std::string& name, std::vector<double> lowpass);

// Built-in kernels: haar, db2..db8.
FilterKernel builtin_kernel(const std::string& name);
std::vector<std::string> builtin_kernel_names();

struct FilterBank {
  std::vector<FilterKernel> kernels;
  bool include_ll = false;  // whether LL planes enter kurtosis statistics
};

// {haar, db2, db3, db4}, include_ll = false: 12 band-pass subbands.
FilterBank default_bank();

// Kernels by built-in name; names must be unique and the list non-empty.
FilterBank make_bank(const std::vector<std::string>& names, bool include_ll = false);

// Plain-text table, one kernel per line: name followed by the lowpass
// coefficients. '#' starts a comment; blank lines are skipped.
FilterBank load_bank_file(const std::string& path, bool include_ll = false);

inline constexpr int kLL = 0, kLH = 1, kHL = 2, kHH = 3;
inline constexpr const char* kPlaneNames[4] = {"LL", "LH", "HL", "HH"};

struct Subband {
  std::string kernel;
  std::string plane;  // one of kPlaneNames
  Image coeffs;       // ceil(h/2) x ceil(w/2)
};

struct SubbandSet {
  int source_height = 0;
  int source_width = 0;
  std::string bank_id;            // comma-joined kernel names
  std::vector<Subband> subbands;  // kernels in bank order, planes LL,LH,HL,HH
};

// Single-level separable DWT with periodic boundary extension; odd dimensions
// are first padded by one replicated row/column (part of the linear map).
// Returns planes indexed by kLL..kHH.
std::array<Image, 4> dwt2_forward(const Image& img, const FilterKernel& kernel);

// Exact adjoint of dwt2_forward as a linear map onto an out_h x out_w image.
Image dwt2_adjoint(const std::array<Image, 4>& planes, const FilterKernel& kernel,
                   int out_h, int out_w);

// dwt2_forward for every kernel in the bank; deterministic ordering.
SubbandSet decompose(const Image& img, const FilterBank& bank);

}  // namespace kcon
