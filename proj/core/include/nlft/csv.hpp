#pragma once

#include <ostream>
#include <span>
#include <string>

#include "nlft/converge.hpp"
#include "nlft/inverse.hpp"
#include "nlft/transfer.hpp"

namespace nlft::csv {

/// %.17g: enough digits to round-trip any double.
std::string fmt(double v);

/// n,t_n,h11,mass
void write_inverse(std::ostream& os, const StepHamiltonian& h, const DiscretePotential& pot);
/// z_re,z_im,f_re,f_im,abs_a,abs_b
void write_forward(std::ostream& os, std::span<const TransferMatrix> rows);
/// T,z_re,z_im,approx_re,approx_im,target_re,target_im,abs_err
void write_sweep(std::ostream& os, std::span<const ConvergenceRow> rows);
/// t,scaled_mass,oracle_f
void write_figure1(std::ostream& os, std::span<const Figure1Row> rows);

}  // namespace nlft::csv
