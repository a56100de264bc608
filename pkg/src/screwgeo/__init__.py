"""Screw sub-Riemannian geometry on frame bundles of constant-curvature
3-manifolds.

The direct orthonormal frame bundle of the model space of curvature
k in {0, 1, -1} is identified with its isometry group; a one-parameter family
of left-invariant distributions (the screw distributions, pitch lambda) makes
it a sub-Riemannian manifold.  This package synthesizes the normal geodesics
in closed form, classifies their projections as helices, and computes
sub-Riemannian length spectra of compact quotients from their complex length
spectra, backing every emitted length with a numerically verified closed
geodesic.

Modules
-------
spaceform   models of the three geometries, their isometry groups and Lie
            algebras, and the frame-bundle identification
helix       helices in the model spaces: curvature/torsion/axis data and
            the generators whose orbits they are
geodesic    the screw distributions and their geodesics in two closed forms,
            with horizontality checking and trajectory export
spectrum    length-spectrum enumeration from complex length data, with
            per-entry verification and spectrum comparison
verify      randomized invariant suites and the finite-difference Frenet
            apparatus used as an independent oracle
"""

from .geodesic import (GeodesicSpec, HorizontalityReport, ScrewConfig,
                       geodesic_geometric, geodesic_lie, horizontal_split,
                       horizontality_check, left_log_derivative,
                       sample_trajectory, speed, write_trajectory_csv,
                       write_trajectory_json)
from .helix import (ComplexLength, FrenetData, HelixType,
                    SphericalRangeWarning, arcsin_k, circle_data, cos_k,
                    cot_k, frenet_frame, generator_from_kappa_tau,
                    helix_type_params, kappa_tau_from_axis,
                    kappa_tau_from_generator, rotation_pair, sin_k,
                    standard_helix_generator, standard_helix_orbit,
                    standard_helix_point, unit_speed_axis_speed)
from .spaceform import (CURVATURES, Frame, algebra_defect, check_curvature,
                        cross_op, exp_at, frame_defect, gram_schmidt_group,
                        group_defect, inner_k, metric_matrix, phi, phi_inv,
                        rot, rotation_generator, screw_generator,
                        translation_generator)
from .spectrum import (CLSpectrum, EnumerationBudget, SpectrumConsistencyError,
                       SpectrumEntry, VerificationReport, compare_spectra,
                       full_spectrum, geodesic_fiber_lengths,
                       helix_type_lengths, load_clspectrum, model_spectrum,
                       read_spectrum, spectrum_lengths, verify_entry,
                       write_spectrum_csv, write_spectrum_json)
from .verify import fd_frenet_data, run_suites

__version__ = "0.1.0"

__all__ = [
    "CLSpectrum",
    "CURVATURES",
    "ComplexLength",
    "EnumerationBudget",
    "Frame",
    "FrenetData",
    "GeodesicSpec",
    "HelixType",
    "HorizontalityReport",
    "ScrewConfig",
    "SpectrumConsistencyError",
    "SpectrumEntry",
    "SphericalRangeWarning",
    "VerificationReport",
    "algebra_defect",
    "arcsin_k",
    "check_curvature",
    "circle_data",
    "compare_spectra",
    "cos_k",
    "cot_k",
    "cross_op",
    "exp_at",
    "fd_frenet_data",
    "frame_defect",
    "frenet_frame",
    "full_spectrum",
    "generator_from_kappa_tau",
    "geodesic_fiber_lengths",
    "geodesic_geometric",
    "geodesic_lie",
    "gram_schmidt_group",
    "group_defect",
    "helix_type_lengths",
    "helix_type_params",
    "horizontal_split",
    "horizontality_check",
    "inner_k",
    "kappa_tau_from_axis",
    "kappa_tau_from_generator",
    "left_log_derivative",
    "load_clspectrum",
    "metric_matrix",
    "model_spectrum",
    "phi",
    "phi_inv",
    "read_spectrum",
    "rot",
    "rotation_generator",
    "rotation_pair",
    "run_suites",
    "sample_trajectory",
    "screw_generator",
    "sin_k",
    "spectrum_lengths",
    "speed",
    "standard_helix_generator",
    "standard_helix_orbit",
    "standard_helix_point",
    "translation_generator",
    "unit_speed_axis_speed",
    "verify_entry",
    "write_spectrum_csv",
    "write_spectrum_json",
    "write_trajectory_csv",
    "write_trajectory_json",
]
