#include "lgt/lattice.hpp"

namespace lgt {

SpinorField translate(const SpinorField& field, const LatticeSpec& spec,
                      int steps) {
  const int P = field.sites();
  SpinorField out(P);
  for (int p = 0; p < P; ++p) {
    int src = p - steps;  // (T psi)_p = psi_{p-1}
    if (src < 0 || src >= P) {
      if (spec.boundary == Boundary::periodic) {
        src = ((src % P) + P) % P;
      } else {
        out[p] = Spinor{};
        continue;
      }
    }
    out[p] = field[src];
  }
  return out;
}

SpinorField spatial_derivative(const SpinorField& field,
                               const LatticeSpec& spec, DerivFlavor flavor) {
  const int P = field.sites();
  const double eps = spec.epsilon;
  SpinorField out(P);
  const SpinorField fwd = translate(field, spec, -1);  // T^-1: psi_{p+1}
  const SpinorField bwd = translate(field, spec, +1);  // T:    psi_{p-1}
  for (int p = 0; p < P; ++p) {
    switch (flavor) {
      case DerivFlavor::symmetric:
        out[p] = (1.0 / (2.0 * eps)) * (fwd[p] - bwd[p]);
        break;
      case DerivFlavor::left:
        out[p] = (1.0 / eps) * (field[p] - bwd[p]);
        break;
      case DerivFlavor::right:
        out[p] = (1.0 / eps) * (fwd[p] - field[p]);
        break;
    }
  }
  return out;
}

SpinorField temporal_derivative(const FieldHistory& history, int j,
                                DerivFlavor flavor) {
  const double eps = history.spec.epsilon;
  switch (flavor) {
    case DerivFlavor::symmetric: {
      const SpinorField& fwd = history.at(j + 1);
      const SpinorField& bwd = history.at(j - 1);
      SpinorField out(fwd.sites());
      for (int p = 0; p < out.sites(); ++p)
        out[p] = (1.0 / (2.0 * eps)) * (fwd[p] - bwd[p]);
      return out;
    }
    case DerivFlavor::left: {
      const SpinorField& cur = history.at(j);
      const SpinorField& bwd = history.at(j - 1);
      SpinorField out(cur.sites());
      for (int p = 0; p < out.sites(); ++p)
        out[p] = (1.0 / eps) * (cur[p] - bwd[p]);
      return out;
    }
    case DerivFlavor::right: {
      const SpinorField& fwd = history.at(j + 1);
      const SpinorField& cur = history.at(j);
      SpinorField out(cur.sites());
      for (int p = 0; p < out.sites(); ++p)
        out[p] = (1.0 / eps) * (fwd[p] - cur[p]);
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

SpinorField laplacian(const SpinorField& field, const LatticeSpec& spec) {
  const int P = field.sites();
  SpinorField out(P);
  const SpinorField fwd = translate(field, spec, -1);
  const SpinorField bwd = translate(field, spec, +1);
  for (int p = 0; p < P; ++p)
    out[p] = fwd[p] + bwd[p] - 2.0 * field[p];
  return out;
}

double field_norm(const SpinorField& field, const LatticeSpec& spec) {
  double s = 0.0;
  for (const auto& v : field.values) s += v.abs2();
  return std::sqrt(spec.epsilon * s);
}

cplx inner(const SpinorField& a, const SpinorField& b,
           const LatticeSpec& spec) {
  cplx s = 0.0;
  for (int p = 0; p < a.sites(); ++p) s += cdot(a[p], b[p]);
  return spec.epsilon * s;
}

}  // namespace lgt
