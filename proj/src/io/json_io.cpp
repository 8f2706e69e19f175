#include "prn/io.hpp"

#include "prn/error.hpp"

namespace prn {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::ParseError, what); }

std::vector<std::uint32_t> uint_list(const Json& j, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + ": expected an array");
  std::vector<std::uint32_t> out;
  out.reserve(j.size());
  for (const Json& x : j) {
    if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<std::int64_t>() >= 0))
      parse_error(std::string(what) + ": expected non-negative integers");
    const std::uint64_t v = x.get<std::uint64_t>();
    if (v > 0xFFFFFFFFu) parse_error(std::string(what) + ": value out of range");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

Perm perm_from(const Json& j, std::size_t degree) {
  std::vector<std::uint32_t> images = uint_list(j, "permutation");
  if (images.size() != degree)
    parse_error("permutation of degree " + std::to_string(images.size()) + ", expected " +
                std::to_string(degree));
  std::vector<Point> pts(images.begin(), images.end());
  try {
    return Perm(std::move(pts));
  } catch (const Error& e) {
    parse_error(std::string("permutation: ") + e.what());
  }
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    parse_error(std::string(what) + ": missing \"" + key + "\"");
  return j.at(key);
}

}  // namespace

Json to_json(const Elem& e) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Perm>) {
          return Json(std::vector<std::uint32_t>(x.images().begin(), x.images().end()));
        } else if constexpr (std::is_same_v<T, WreathElem>) {
          Json o = Json::object();
          o["v"] = x.v;
          o["s"] = to_json(Elem(x.s));
          return o;
        } else if constexpr (std::is_same_v<T, GFMatrix>) {
          Json o = Json::object();
          o["p"] = x.p;
          o["d"] = x.d;
          o["entries"] = x.a;
          return o;
        } else if constexpr (std::is_same_v<T, TupleElem>) {
          Json a = Json::array();
          for (const Elem& part : x.parts) a.push_back(to_json(part));
          return a;
        } else if constexpr (std::is_same_v<T, BaseWreathElem>) {
          Json o = Json::object();
          Json base = Json::array();
          for (const Elem& slot : x.base) base.push_back(to_json(slot));
          o["base"] = std::move(base);
          o["s"] = to_json(Elem(x.top));
          return o;
        } else {
          Json o = Json::object();
          o["coset"] = to_json(*x.rep);
          return o;
        }
      },
      e.payload());
}

Json to_json(const Decision& d) {
  Json o = Json::object();
  o["verdict"] = std::string(verdict_name(d.verdict));
  Json reasons = Json::array();
  for (const Reason& r : d.reasons) {
    Json jr = Json::object();
    jr["criterion"] = r.criterion;
    if (r.factor) jr["factor"] = *r.factor;
    jr["detail"] = r.detail;
    reasons.push_back(std::move(jr));
  }
  o["reasons"] = std::move(reasons);
  Json w = Json::array();
  for (const Elem& e : d.witnesses) w.push_back(to_json(e));
  o["witnesses"] = std::move(w);
  return o;
}

Elem elem_from_json(const Json& j, const Elem& shape) {
  return std::visit(
      [&](const auto& s) -> Elem {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Perm>) {
          return perm_from(j, s.degree());
        } else if constexpr (std::is_same_v<T, WreathElem>) {
          WreathElem w;
          w.p = s.p;
          w.v = uint_list(field(j, "v", "wreath element"), "wreath vector");
          if (w.v.size() != s.v.size()) parse_error("wreath vector has the wrong length");
          for (std::uint32_t x : w.v)
            if (x >= s.p) parse_error("wreath vector entry out of range");
          w.s = perm_from(field(j, "s", "wreath element"), s.s.degree());
          return w;
        } else if constexpr (std::is_same_v<T, GFMatrix>) {
          GFMatrix m{s.p, s.d, {}};
          const Json* entries = &j;
          if (j.is_object()) {
            const auto p = field(j, "p", "matrix");
            const auto d = field(j, "d", "matrix");
            if (!p.is_number_integer() || p.get<std::int64_t>() != std::int64_t{s.p} ||
                !d.is_number_integer() || d.get<std::int64_t>() != std::int64_t{s.d})
              parse_error("matrix (p, d) differs from the ambient group");
            entries = &field(j, "entries", "matrix");
          }
          m.a = uint_list(*entries, "matrix entries");
          if (m.a.size() != std::size_t{s.d} * s.d) parse_error("wrong number of matrix entries");
          for (std::uint32_t x : m.a)
            if (x >= s.p) parse_error("matrix entry out of range");
          return m;
        } else if constexpr (std::is_same_v<T, TupleElem>) {
          TupleElem t;
          if (j.is_object() && s.parts.size() == 1) {
            t.parts.push_back(elem_from_json(j, s.parts[0]));
            return t;
          }
          if (!j.is_array() || j.size() != s.parts.size())
            parse_error("expected an array of " + std::to_string(s.parts.size()) + " components");
          for (std::size_t i = 0; i < j.size(); ++i) t.parts.push_back(elem_from_json(j[i], s.parts[i]));
          return t;
        } else if constexpr (std::is_same_v<T, BaseWreathElem>) {
          BaseWreathElem w;
          const Json& base = field(j, "base", "wreath element");
          if (!base.is_array() || base.size() != s.base.size())
            parse_error("expected " + std::to_string(s.base.size()) + " base slots");
          for (std::size_t i = 0; i < base.size(); ++i) w.base.push_back(elem_from_json(base[i], s.base[i]));
          w.top = perm_from(field(j, "s", "wreath element"), s.top.degree());
          return w;
        } else {
          CosetElem c;
          c.rep = std::make_shared<const Elem>(elem_from_json(field(j, "coset", "coset"), *s.rep));
          return c;
        }
      },
      shape.payload());
}

Index parse_element(const Group& G, const Json& j) {
  return G.index_of(elem_from_json(j, G.element(G.identity())));
}

std::vector<Index> parse_elements(const Group& G, const Json& list) {
  if (!list.is_array()) parse_error("expected an array of elements");
  std::vector<Index> out;
  for (const Json& j : list) out.push_back(parse_element(G, j));
  return out;
}

}  // namespace prn
