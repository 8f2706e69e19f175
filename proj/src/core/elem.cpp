#include "prn/elem.hpp"

#include <sstream>

#include "prn/error.hpp"

namespace prn {

bool operator==(const TupleElem& x, const TupleElem& y) { return x.parts == y.parts; }

bool operator==(const BaseWreathElem& x, const BaseWreathElem& y) {
  return x.top == y.top && x.base == y.base;
}

bool operator==(const CosetElem& x, const CosetElem& y) {
  if (!x.rep || !y.rep) return x.rep == y.rep;
  return *x.rep == *y.rep;
}

namespace {

[[noreturn]] void incompatible(const char* what) {
  throw Error(Errc::IncompatiblePayloads, what);
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  if (r >> 64) throw Error(Errc::CapExceeded, "canonical code exceeds 64 bits");
  return static_cast<std::uint64_t>(r);
}

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

WreathElem wreath_mul(const WreathElem& a, const WreathElem& b) {
  if (a.p != b.p || a.v.size() != b.v.size()) incompatible("wreath shapes differ");
  WreathElem out{a.p, std::vector<std::uint32_t>(a.v.size()), compose(a.s, b.s)};
  for (std::size_t i = 0; i < a.v.size(); ++i) out.v[i] = (a.v[i] + b.v[a.s(i)]) % a.p;
  return out;
}

WreathElem wreath_inv(const WreathElem& a) {
  const Perm sinv = a.s.inverse();
  WreathElem out{a.p, std::vector<std::uint32_t>(a.v.size()), sinv};
  for (std::size_t j = 0; j < a.v.size(); ++j) out.v[j] = (a.p - a.v[sinv(j)]) % a.p;
  return out;
}

GFMatrix matrix_mul(const GFMatrix& a, const GFMatrix& b) {
  if (a.p != b.p || a.d != b.d) incompatible("matrix shapes differ");
  const std::size_t d = a.d;
  GFMatrix out{a.p, a.d, std::vector<std::uint32_t>(d * d, 0)};
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < d; ++k) acc += std::uint64_t{a.at(r, k)} * b.at(k, c);
      out.a[r * d + c] = static_cast<std::uint32_t>(acc % a.p);
    }
  return out;
}

std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t p) {
  // p prime: x^(p-2)
  std::uint64_t r = 1, b = x % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

GFMatrix matrix_inv(const GFMatrix& m) {
  const std::size_t d = m.d;
  const std::uint64_t p = m.p;
  std::vector<std::uint64_t> w(d * 2 * d, 0);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) w[r * 2 * d + c] = m.at(r, c);
    w[r * 2 * d + d + r] = 1;
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && w[pivot * 2 * d + col] == 0) ++pivot;
    if (pivot == d) throw Error(Errc::InvalidArgument, "singular matrix");
    for (std::size_t c = 0; c < 2 * d; ++c)
      std::swap(w[pivot * 2 * d + c], w[col * 2 * d + c]);
    const std::uint64_t inv = inverse_mod(w[col * 2 * d + col], p);
    for (std::size_t c = 0; c < 2 * d; ++c) w[col * 2 * d + c] = w[col * 2 * d + c] * inv % p;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col) continue;
      const std::uint64_t f = w[r * 2 * d + col];
      if (!f) continue;
      for (std::size_t c = 0; c < 2 * d; ++c)
        w[r * 2 * d + c] = (w[r * 2 * d + c] + (p - f) * w[col * 2 * d + c]) % p;
    }
  }
  GFMatrix out{m.p, m.d, std::vector<std::uint32_t>(d * d)};
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      out.a[r * d + c] = static_cast<std::uint32_t>(w[r * 2 * d + d + c]);
  return out;
}

}  // namespace

Elem multiply(const Elem& a, const Elem& b) {
  if (a.payload().index() != b.payload().index()) incompatible("payload kinds differ");
  if (a.is<Perm>()) {
    if (a.as<Perm>().degree() != b.as<Perm>().degree()) incompatible("degrees differ");
    return compose(a.as<Perm>(), b.as<Perm>());
  }
  if (a.is<WreathElem>()) return wreath_mul(a.as<WreathElem>(), b.as<WreathElem>());
  if (a.is<GFMatrix>()) return matrix_mul(a.as<GFMatrix>(), b.as<GFMatrix>());
  if (a.is<TupleElem>()) {
    const auto& x = a.as<TupleElem>().parts;
    const auto& y = b.as<TupleElem>().parts;
    if (x.size() != y.size()) incompatible("tuple arities differ");
    TupleElem out;
    out.parts.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.parts.push_back(multiply(x[i], y[i]));
    return out;
  }
  if (a.is<BaseWreathElem>()) {
    const auto& x = a.as<BaseWreathElem>();
    const auto& y = b.as<BaseWreathElem>();
    if (x.base.size() != y.base.size() || x.top.degree() != y.top.degree())
      incompatible("wreath shapes differ");
    BaseWreathElem out;
    out.top = compose(x.top, y.top);
    out.base.reserve(x.base.size());
    for (std::size_t i = 0; i < x.base.size(); ++i)
      out.base.push_back(multiply(x.base[i], y.base[x.top(i)]));
    return out;
  }
  incompatible("cosets multiply only inside their quotient group");
}

Elem inverse(const Elem& a) {
  if (a.is<Perm>()) return a.as<Perm>().inverse();
  if (a.is<WreathElem>()) return wreath_inv(a.as<WreathElem>());
  if (a.is<GFMatrix>()) return matrix_inv(a.as<GFMatrix>());
  if (a.is<TupleElem>()) {
    TupleElem out;
    for (const Elem& part : a.as<TupleElem>().parts) out.parts.push_back(inverse(part));
    return out;
  }
  if (a.is<BaseWreathElem>()) {
    const auto& x = a.as<BaseWreathElem>();
    BaseWreathElem out;
    out.top = x.top.inverse();
    out.base.resize(x.base.size());
    for (std::size_t j = 0; j < x.base.size(); ++j) out.base[j] = inverse(x.base[out.top(j)]);
    return out;
  }
  incompatible("cosets invert only inside their quotient group");
}

Elem identity_like(const Elem& a) {
  if (a.is<Perm>()) return Perm::identity(a.as<Perm>().degree());
  if (a.is<WreathElem>()) {
    const auto& w = a.as<WreathElem>();
    return WreathElem{w.p, std::vector<std::uint32_t>(w.v.size(), 0),
                      Perm::identity(w.s.degree())};
  }
  if (a.is<GFMatrix>()) {
    const auto& m = a.as<GFMatrix>();
    GFMatrix out{m.p, m.d, std::vector<std::uint32_t>(m.d * m.d, 0)};
    for (std::size_t i = 0; i < m.d; ++i) out.a[i * m.d + i] = 1;
    return out;
  }
  if (a.is<TupleElem>()) {
    TupleElem out;
    for (const Elem& part : a.as<TupleElem>().parts) out.parts.push_back(identity_like(part));
    return out;
  }
  if (a.is<BaseWreathElem>()) {
    const auto& x = a.as<BaseWreathElem>();
    BaseWreathElem out;
    out.top = Perm::identity(x.top.degree());
    for (const Elem& b : x.base) out.base.push_back(identity_like(b));
    return out;
  }
  incompatible("coset identity is owned by its quotient group");
}

bool same_shape(const Elem& a, const Elem& b) {
  if (a.payload().index() != b.payload().index()) return false;
  if (a.is<Perm>()) return a.as<Perm>().degree() == b.as<Perm>().degree();
  if (a.is<WreathElem>())
    return a.as<WreathElem>().p == b.as<WreathElem>().p &&
           a.as<WreathElem>().v.size() == b.as<WreathElem>().v.size();
  if (a.is<GFMatrix>())
    return a.as<GFMatrix>().p == b.as<GFMatrix>().p && a.as<GFMatrix>().d == b.as<GFMatrix>().d;
  if (a.is<TupleElem>()) {
    const auto& x = a.as<TupleElem>().parts;
    const auto& y = b.as<TupleElem>().parts;
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!same_shape(x[i], y[i])) return false;
    return true;
  }
  if (a.is<BaseWreathElem>()) {
    const auto& x = a.as<BaseWreathElem>();
    const auto& y = b.as<BaseWreathElem>();
    if (x.base.size() != y.base.size() || x.top.degree() != y.top.degree()) return false;
    for (std::size_t i = 0; i < x.base.size(); ++i)
      if (!same_shape(x.base[i], y.base[i])) return false;
    return true;
  }
  const auto& x = a.as<CosetElem>();
  const auto& y = b.as<CosetElem>();
  return x.rep && y.rep && same_shape(*x.rep, *y.rep);
}

std::uint64_t code_bound(const Elem& a) {
  if (a.is<Perm>()) return factorial(a.as<Perm>().degree());
  if (a.is<WreathElem>()) {
    const auto& w = a.as<WreathElem>();
    return checked_mul(ipow(w.p, w.v.size()), factorial(w.s.degree()));
  }
  if (a.is<GFMatrix>()) {
    const auto& m = a.as<GFMatrix>();
    return ipow(m.p, std::uint64_t{m.d} * m.d);
  }
  if (a.is<TupleElem>()) {
    std::uint64_t b = 1;
    for (const Elem& part : a.as<TupleElem>().parts) b = checked_mul(b, code_bound(part));
    return b;
  }
  if (a.is<BaseWreathElem>()) {
    const auto& x = a.as<BaseWreathElem>();
    std::uint64_t b = factorial(x.top.degree());
    for (const Elem& part : x.base) b = checked_mul(b, code_bound(part));
    return b;
  }
  return code_bound(*a.as<CosetElem>().rep);
}

std::uint64_t encode(const Elem& a) {
  if (a.is<Perm>()) return a.as<Perm>().rank();
  if (a.is<WreathElem>()) {
    const auto& w = a.as<WreathElem>();
    std::uint64_t c = 0;
    for (std::uint32_t x : w.v) c = checked_mul(c, w.p) + x;
    return checked_mul(c, factorial(w.s.degree())) + w.s.rank();
  }
  if (a.is<GFMatrix>()) {
    const auto& m = a.as<GFMatrix>();
    std::uint64_t c = 0;
    for (std::uint32_t x : m.a) c = checked_mul(c, m.p) + x;
    return c;
  }
  if (a.is<TupleElem>()) {
    std::uint64_t c = 0;
    for (const Elem& part : a.as<TupleElem>().parts)
      c = checked_mul(c, code_bound(part)) + encode(part);
    return c;
  }
  if (a.is<BaseWreathElem>()) {
    const auto& x = a.as<BaseWreathElem>();
    std::uint64_t c = 0;
    for (const Elem& part : x.base) c = checked_mul(c, code_bound(part)) + encode(part);
    return checked_mul(c, factorial(x.top.degree())) + x.top.rank();
  }
  return encode(*a.as<CosetElem>().rep);
}

std::size_t action_degree(const Elem& a) {
  std::size_t d = 0;
  if (a.is<Perm>()) {
    d = a.as<Perm>().degree();
  } else if (a.is<WreathElem>()) {
    d = std::size_t{a.as<WreathElem>().p} * a.as<WreathElem>().v.size();
  } else if (a.is<GFMatrix>()) {
    const auto& m = a.as<GFMatrix>();
    std::uint64_t points = 1;
    for (std::uint32_t i = 0; i < m.d && points <= 256; ++i) points *= m.p;
    d = points > 256 ? 256 : static_cast<std::size_t>(points - 1);
  } else if (a.is<TupleElem>()) {
    for (const Elem& part : a.as<TupleElem>().parts) {
      const std::size_t pd = action_degree(part);
      if (pd == 0) return 0;
      d += pd;
    }
  } else if (a.is<BaseWreathElem>()) {
    const auto& x = a.as<BaseWreathElem>();
    if (x.base.empty()) return 0;
    const std::size_t bd = action_degree(x.base.front());
    if (bd == 0) return 0;
    d = bd * x.base.size();
  }
  return d <= 255 ? d : 0;
}

void action_images(const Elem& a, std::uint8_t* out) {
  if (a.is<Perm>()) {
    const auto& images = a.as<Perm>().images();
    for (std::size_t i = 0; i < images.size(); ++i) out[i] = static_cast<std::uint8_t>(images[i]);
  } else if (a.is<WreathElem>()) {
    const auto& w = a.as<WreathElem>();
    for (std::size_t i = 0; i < w.v.size(); ++i)
      for (std::uint32_t x = 0; x < w.p; ++x)
        out[i * w.p + x] = static_cast<std::uint8_t>(w.s(i) * w.p + (x + w.v[i]) % w.p);
  } else if (a.is<GFMatrix>()) {
    const auto& m = a.as<GFMatrix>();
    const std::size_t points = action_degree(a);
    std::vector<std::uint32_t> u(m.d), image(m.d);
    for (std::size_t pt = 0; pt < points; ++pt) {
      std::size_t c = pt + 1;
      for (std::size_t k = m.d; k-- > 0;) {
        u[k] = static_cast<std::uint32_t>(c % m.p);
        c /= m.p;
      }
      std::size_t code = 0;
      for (std::size_t j = 0; j < m.d; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < m.d; ++k) acc += std::uint64_t{u[k]} * m.at(k, j);
        code = code * m.p + acc % m.p;
      }
      out[pt] = static_cast<std::uint8_t>(code - 1);
    }
  } else if (a.is<TupleElem>()) {
    std::size_t offset = 0;
    for (const Elem& part : a.as<TupleElem>().parts) {
      const std::size_t pd = action_degree(part);
      action_images(part, out + offset);
      for (std::size_t i = 0; i < pd; ++i) out[offset + i] = static_cast<std::uint8_t>(out[offset + i] + offset);
      offset += pd;
    }
  } else if (a.is<BaseWreathElem>()) {
    const auto& x = a.as<BaseWreathElem>();
    const std::size_t bd = action_degree(x.base.front());
    std::vector<std::uint8_t> local(bd);
    for (std::size_t i = 0; i < x.base.size(); ++i) {
      action_images(x.base[i], local.data());
      for (std::size_t pt = 0; pt < bd; ++pt)
        out[i * bd + pt] = static_cast<std::uint8_t>(x.top(i) * bd + local[pt]);
    }
  } else {
    incompatible("cosets have no point action");
  }
}

std::string to_string(const Elem& a) {
  std::ostringstream os;
  auto list = [&os](const auto& xs) {
    os << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << ']';
  };
  if (a.is<Perm>()) {
    list(a.as<Perm>().images());
  } else if (a.is<WreathElem>()) {
    os << "{v=";
    list(a.as<WreathElem>().v);
    os << ",s=";
    list(a.as<WreathElem>().s.images());
    os << '}';
  } else if (a.is<GFMatrix>()) {
    os << "M" << a.as<GFMatrix>().p;
    list(a.as<GFMatrix>().a);
  } else if (a.is<TupleElem>()) {
    os << '(';
    const auto& parts = a.as<TupleElem>().parts;
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << to_string(parts[i]);
    os << ')';
  } else if (a.is<BaseWreathElem>()) {
    const auto& x = a.as<BaseWreathElem>();
    os << '<';
    for (std::size_t i = 0; i < x.base.size(); ++i) os << (i ? "," : "") << to_string(x.base[i]);
    os << ";";
    list(x.top.images());
    os << '>';
  } else {
    os << "coset:" << to_string(*a.as<CosetElem>().rep);
  }
  return os.str();
}

}  // namespace prn
