#ifndef QOCSIM_UNITS_HPP
#define QOCSIM_UNITS_HPP

// Physical constants and unit conversions. Internal computations are carried
// out in Hartree atomic units; these factors convert lab-unit model
// parameters (J, cm^-1, D, fs, ns) at the system boundaries.

namespace qocsim::units {

// CODATA 2018.
inline constexpr double hartree_joule = 4.3597447222071e-18;  // Eh in J
inline constexpr double hartree_wavenumber = 219474.6313632;  // Eh in cm^-1
inline constexpr double fs_atomic_time = 41.341373335;        // 1 fs in au
inline constexpr double debye_atomic = 0.3934302693;          // 1 D in e*a0
inline constexpr double four_pi_epsilon0 = 1.11265005554e-10; // C^2/(J*m)
inline constexpr double boltzmann_wavenumber = 0.6950348004;  // kB in cm^-1/K

inline constexpr double fs_to_au(double t_fs) { return t_fs * fs_atomic_time; }
inline constexpr double ns_to_au(double t_ns) { return t_ns * 1.0e6 * fs_atomic_time; }
inline constexpr double joule_to_hartree(double e) { return e / hartree_joule; }
inline constexpr double wavenumber_to_hartree(double e) { return e / hartree_wavenumber; }

} // namespace qocsim::units

#endif
