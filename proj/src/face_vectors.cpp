#include "facering/face_vectors.hpp"

#include "facering/rational.hpp"

#include <stdexcept>

namespace facering {

FaceVector f_vector(const RelativeComplex& psi) {
  const SimplicialComplex& total = psi.total();
  if (total.is_void()) throw std::domain_error("f_vector of the void complex");
  int dim = total.dim();
  FaceVector fv;
  fv.entries.assign(static_cast<size_t>(dim) + 2, 0);
  const auto& byc = total.faces_by_card();
  for (int c = 0; c < static_cast<int>(byc.size()); ++c) {
    long long count = 0;
    for (const auto& face : byc[static_cast<size_t>(c)])
      if (psi.sub_is_void() || !psi.sub().is_face(face)) ++count;
    fv.entries[static_cast<size_t>(c)] = count;
  }
  return fv;
}

HVector h_vector(const FaceVector& f, int d) {
  if (d < 0) throw std::invalid_argument("h_vector needs a nonnegative d");
  HVector h;
  h.entries.assign(static_cast<size_t>(d) + 1, 0);
  for (int j = 0; j <= d; ++j) {
    long long acc = 0;
    for (int i = 0; i <= j; ++i) {
      long long term = binomial_ll(d - i, d - j) * f.f(i - 1);
      acc += ((j - i) % 2 == 0) ? term : -term;
    }
    h.entries[static_cast<size_t>(j)] = acc;
  }
  return h;
}

HVector h_vector(const RelativeComplex& psi, int d) {
  FaceVector f = f_vector(psi);
  if (d < 0) d = psi.total().dim() + 1;
  return h_vector(f, d);
}

GVector g_vector(const RelativeComplex& psi, int d) {
  HVector h = h_vector(psi, d);
  GVector g;
  g.entries.assign(h.entries.size(), 0);
  for (int j = 0; j < static_cast<int>(h.entries.size()); ++j)
    g.entries[static_cast<size_t>(j)] = h.g(j);
  return g;
}

FaceVector f_from_h(const HVector& h) {
  int d = h.d();
  FaceVector f;
  f.entries.assign(static_cast<size_t>(d) + 1, 0);
  for (int j = 0; j <= d; ++j) {
    long long acc = 0;
    for (int i = 0; i <= j; ++i) acc += binomial_ll(d - i, d - j) * h.h(i);
    f.entries[static_cast<size_t>(j)] = acc;  // f_{j-1}
  }
  return f;
}

}  // namespace facering
