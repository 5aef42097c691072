#include <map>

#include "kcon/wavelet.hpp"

namespace kcon {

namespace {

// Daubechies scaling (lowpass) coefficients, orthonormal convention
// (sum h = sqrt(2), sum h^2 = 1), computed by spectral factorization of the
// maximally-flat halfband polynomial with the minimum-phase root selection.
const std::map<std::string, std::vector<double>>& scaling_table() {
  static const std::map<std::string, std::vector<double>> table = {
      {"haar", {0.70710678118654752440, 0.70710678118654752440}},
      {"db2",
       {0.48296291314453414337, 0.83651630373780790558, 0.22414386804201338103,
        -0.12940952255126038117}},
      {"db3",
       {0.33267055295008261600, 0.80689150931109257649, 0.45987750211849157010,
        -0.13501102001025458870, -0.08544127388202666169, 0.03522629188570953660}},
      {"db4",
       {0.23037781330889650086, 0.71484657055291564709, 0.63088076792985890788,
        -0.02798376941685985421, -0.18703481171909308408, 0.03084138183556076363,
        0.03288301166688519973, -0.01059740178506903210}},
      {"db5",
       {0.16010239797419291448, 0.60382926979718967054, 0.72430852843777292773,
        0.13842814590132073151, -0.24229488706638203186, -0.03224486958463837465,
        0.07757149384004571352, -0.00624149021279827427, -0.01258075199908199947,
        0.00333572528547377128}},
      {"db6",
       {0.11154074335010946362, 0.49462389039845308568, 0.75113390802109535068,
        0.31525035170919762909, -0.22626469396543982008, -0.12976686756726193556,
        0.09750160558732304910, 0.02752286553030572863, -0.03158203931748602957,
        0.00055384220116149614, 0.00477725751094551064, -0.00107730108530847956}},
      {"db7",
       {0.07785205408500917902, 0.39653931948191730654, 0.72913209084623511992,
        0.46978228740519312247, -0.14390600392856497541, -0.22403618499387498264,
        0.07130921926683026475, 0.08061260915108307191, -0.03802993693501441358,
        -0.01657454163066688065, 0.01255099855609984061, 0.00042957797292136652,
        -0.00180164070404749092, 0.00035371379997452025}},
      {"db8",
       {0.05441584224310400995, 0.31287159091429997066, 0.67563073629728980681,
        0.58535468365420671277, -0.01582910525634930567, -0.28401554296154692652,
        0.00047248457391328277, 0.12874742662047845886, -0.01736930100180754617,
        -0.04408825393079475151, 0.01398102791739828165, 0.00874609404740577672,
        -0.00487035299345157431, -0.00039174037337694705, 0.00067544940645056937,
        -0.00011747678412476953}},
  };
  return table;
}

}  // namespace

FilterKernel builtin_kernel(const std::string& name) {
  const auto& table = scaling_table();
  auto it = table.find(name);
  if (it == table.end()) throw BankConfigError("unknown kernel name: " + name);
  return make_kernel(name, it->second);
}

std::vector<std::string> builtin_kernel_names() {
  std::vector<std::string> names;
  for (const auto& [name, coeffs] : scaling_table()) names.push_back(name);
  return names;
}

FilterBank default_bank() { return make_bank({"haar", "db2", "db3", "db4"}, false); }

}  // namespace kcon
