#include "nlft/csv.hpp"

#include <cstdio>

namespace nlft::csv {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_inverse(std::ostream& os, const StepHamiltonian& h, const DiscretePotential& pot) {
  os << "n,t_n,h11,mass\n";
  for (std::size_t n = 0; n < h.steps.size(); ++n)
    os << n << ',' << fmt(pot.position(n)) << ',' << fmt(h.steps[n]) << ',' << fmt(pot.masses[n]) << '\n';
}

void write_forward(std::ostream& os, std::span<const TransferMatrix> rows) {
  os << "z_re,z_im,f_re,f_im,abs_a,abs_b\n";
  for (const auto& r : rows) {
    const cplx f = r.b / r.a;
    os << fmt(r.z.real()) << ',' << fmt(r.z.imag()) << ',' << fmt(f.real()) << ',' << fmt(f.imag()) << ','
       << fmt(std::abs(r.a)) << ',' << fmt(std::abs(r.b)) << '\n';
  }
}

void write_sweep(std::ostream& os, std::span<const ConvergenceRow> rows) {
  os << "T,z_re,z_im,approx_re,approx_im,target_re,target_im,abs_err\n";
  for (const auto& r : rows)
    os << fmt(r.T) << ',' << fmt(r.z.real()) << ',' << fmt(r.z.imag()) << ',' << fmt(r.approx.real()) << ','
       << fmt(r.approx.imag()) << ',' << fmt(r.target.real()) << ',' << fmt(r.target.imag()) << ','
       << fmt(r.abs_err) << '\n';
}

void write_figure1(std::ostream& os, std::span<const Figure1Row> rows) {
  os << "t,scaled_mass,oracle_f\n";
  for (const auto& r : rows) os << fmt(r.t) << ',' << fmt(r.scaled_mass) << ',' << fmt(r.oracle_f) << '\n';
}

}  // namespace nlft::csv
