#pragma once

// The category definition text format (line-oriented, '#' comments) and
// its JSON equivalent, with a canonical serializer. Parsing is total over
// the grammar: every problem is reported with its line number; semantic
// errors (unknown ids, duplicates, missing composites) are collected, not
// thrown.

#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sextor/ideal.hpp"

namespace sextor {

using Json = nlohmann::ordered_json;

struct ParseIssue {
  int line = 0;  // 0 when no specific line applies
  std::string message;
};

struct ParsedCategory {
  bool ok = false;
  std::vector<ParseIssue> issues;
  std::optional<FinCategory> cat;
  Ideal ideal;             // empty when no null block was given
  bool had_null_block = false;
};

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

// Collects the raw directives before building, so semantic analysis can
// run over a complete picture.
struct RawCategory {
  std::string name;
  bool has_name = false;
  CategoryBuilder builder{""};
  std::vector<std::string> null_morphisms;
  std::vector<std::string> null_objects;
  bool has_null_list = false, has_null_objects = false;
  std::vector<ParseIssue> issues;

  void err(int line, std::string m) { issues.push_back({line, std::move(m)}); }
};

inline void finish(RawCategory& raw, ParsedCategory& out) {
  if (!raw.has_name) {
    raw.err(0, "no category declared");
    out.issues = raw.issues;
    return;
  }
  for (auto& [g, f] : raw.builder.missing_composites())
    raw.err(0, "missing composite " + raw.builder.mor_name(g) + " . " + raw.builder.mor_name(f));
  if (raw.has_null_list && raw.has_null_objects)
    raw.err(0, "both null and null objects blocks given");
  if (!raw.issues.empty()) {
    out.issues = raw.issues;
    return;
  }
  FinCategory cat = raw.builder.build();
  if (raw.has_null_objects) {
    std::vector<ObjId> zs;
    for (auto& n : raw.null_objects) {
      auto o = cat.find_obj(n);
      if (!o) {
        out.issues.push_back({0, "unknown object in null objects block: " + n});
        return;
      }
      zs.push_back(*o);
    }
    out.ideal = ideal_from_objects(cat, zs);
    out.had_null_block = true;
  } else if (raw.has_null_list) {
    std::vector<MorId> ms;
    for (auto& n : raw.null_morphisms) {
      auto m = cat.find_mor(n);
      if (!m) {
        out.issues.push_back({0, "unknown morphism in null block: " + n});
        return;
      }
      ms.push_back(*m);
    }
    out.ideal = Ideal::from_morphisms(cat, ms);
    out.had_null_block = true;
  } else {
    out.ideal = Ideal::none(cat);
  }
  out.cat = std::move(cat);
  out.ok = true;
}

}  // namespace detail

inline ParsedCategory parse_category_text(const std::string& text) {
  ParsedCategory out;
  detail::RawCategory raw;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = detail::tokens(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    auto want = [&](std::size_t n) {
      if (toks.size() != n) {
        raw.err(lineno, "malformed " + kw + " directive");
        return false;
      }
      return true;
    };
    try {
      if (kw == "category") {
        if (!want(2)) continue;
        if (raw.has_name) {
          raw.err(lineno, "duplicate category directive");
          continue;
        }
        raw.name = toks[1];
        raw.has_name = true;
        raw.builder = CategoryBuilder(toks[1]);
      } else if (kw == "object") {
        if (!want(2)) continue;
        raw.builder.add_object(toks[1]);
      } else if (kw == "morphism") {
        // morphism m : a -> b
        if (toks.size() != 6 || toks[2] != ":" || toks[4] != "->") {
          raw.err(lineno, "malformed morphism directive");
          continue;
        }
        auto a = raw.builder.find_obj(toks[3]), b = raw.builder.find_obj(toks[5]);
        if (!a || !b) {
          raw.err(lineno, "unknown object in morphism directive");
          continue;
        }
        raw.builder.add_morphism(toks[1], *a, *b);
      } else if (kw == "identity") {
        // identity o = m
        if (toks.size() != 4 || toks[2] != "=") {
          raw.err(lineno, "malformed identity directive");
          continue;
        }
        auto o = raw.builder.find_obj(toks[1]);
        auto m = raw.builder.find_mor(toks[3]);
        if (!o || !m) {
          raw.err(lineno, "unknown id in identity directive");
          continue;
        }
        raw.builder.set_identity(*o, *m);
      } else if (kw == "compose") {
        // compose g . f = h
        if (toks.size() != 6 || toks[2] != "." || toks[4] != "=") {
          raw.err(lineno, "malformed compose directive");
          continue;
        }
        auto g = raw.builder.find_mor(toks[1]);
        auto f = raw.builder.find_mor(toks[3]);
        auto h = raw.builder.find_mor(toks[5]);
        if (!g || !f || !h) {
          raw.err(lineno, "unknown morphism in compose directive");
          continue;
        }
        if (raw.builder.mor_cod(*f) != raw.builder.mor_dom(*g)) {
          raw.err(lineno, "compose directive for non-composable pair");
          continue;
        }
        raw.builder.set_compose(*g, *f, *h);
      } else if (kw == "null") {
        // null { m ... }   |   null objects { o ... }
        std::size_t i = 1;
        bool objects = false;
        if (i < toks.size() && toks[i] == "objects") {
          objects = true;
          ++i;
        }
        if (i >= toks.size() || toks[i] != "{" || toks.back() != "}") {
          raw.err(lineno, "malformed null block");
          continue;
        }
        std::vector<std::string> names(toks.begin() + std::ptrdiff_t(i) + 1, toks.end() - 1);
        if (objects) {
          if (raw.has_null_objects) raw.err(lineno, "duplicate null objects block");
          raw.has_null_objects = true;
          raw.null_objects = names;
        } else {
          if (raw.has_null_list) raw.err(lineno, "duplicate null block");
          raw.has_null_list = true;
          raw.null_morphisms = names;
        }
      } else {
        raw.err(lineno, "unknown directive: " + kw);
      }
    } catch (const std::invalid_argument& ex) {
      raw.err(lineno, ex.what());
    }
  }
  detail::finish(raw, out);
  return out;
}

inline ParsedCategory parse_category_json(const std::string& text) {
  ParsedCategory out;
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& ex) {
    out.issues.push_back({0, std::string("invalid JSON: ") + ex.what()});
    return out;
  }
  detail::RawCategory raw;
  try {
    if (!j.contains("category")) {
      out.issues.push_back({0, "no category declared"});
      return out;
    }
    raw.name = j["category"].get<std::string>();
    raw.has_name = true;
    raw.builder = CategoryBuilder(raw.name);
    for (auto& o : j.value("objects", Json::array())) raw.builder.add_object(o.get<std::string>());
    for (auto& m : j.value("morphisms", Json::array())) {
      auto a = raw.builder.find_obj(m.at("dom").get<std::string>());
      auto b = raw.builder.find_obj(m.at("cod").get<std::string>());
      if (!a || !b) {
        out.issues.push_back({0, "unknown object in morphism entry"});
        return out;
      }
      raw.builder.add_morphism(m.at("id").get<std::string>(), *a, *b);
    }
    for (auto& [obj, mor] : j.value("identity", Json::object()).items()) {
      auto o = raw.builder.find_obj(obj);
      auto m = raw.builder.find_mor(mor.get<std::string>());
      if (!o || !m) {
        out.issues.push_back({0, "unknown id in identity entry"});
        return out;
      }
      raw.builder.set_identity(*o, *m);
    }
    for (auto& e : j.value("compose", Json::array())) {
      auto g = raw.builder.find_mor(e.at(0).get<std::string>());
      auto f = raw.builder.find_mor(e.at(1).get<std::string>());
      auto h = raw.builder.find_mor(e.at(2).get<std::string>());
      if (!g || !f || !h) {
        out.issues.push_back({0, "unknown morphism in compose entry"});
        return out;
      }
      raw.builder.set_compose(*g, *f, *h);
    }
    if (j.contains("null")) {
      raw.has_null_list = true;
      for (auto& m : j["null"]) raw.null_morphisms.push_back(m.get<std::string>());
    }
    if (j.contains("null_objects")) {
      raw.has_null_objects = true;
      for (auto& o : j["null_objects"]) raw.null_objects.push_back(o.get<std::string>());
    }
  } catch (const std::exception& ex) {
    out.issues.push_back({0, ex.what()});
    return out;
  }
  detail::finish(raw, out);
  return out;
}

/// Dispatches on the leading non-space character: '{' means JSON.
inline ParsedCategory parse_category(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{') return parse_category_json(text);
    break;
  }
  return parse_category_text(text);
}

/// Canonical text serialization; parsing it back reproduces the category
/// with identical identifier order.
inline std::string serialize_category(const FinCategory& c, const Ideal* ideal = nullptr,
                                      const std::vector<std::string>& comments = {}) {
  std::ostringstream os;
  for (const auto& line : comments) os << "# " << line << "\n";
  os << "category " << c.name() << "\n";
  for (ObjId o = 0; o < c.n_objects(); ++o) os << "object " << c.obj_name(o) << "\n";
  for (MorId m = 0; m < c.n_morphisms(); ++m)
    os << "morphism " << c.mor_name(m) << " : " << c.obj_name(c.dom(m)) << " -> "
       << c.obj_name(c.cod(m)) << "\n";
  for (ObjId o = 0; o < c.n_objects(); ++o)
    os << "identity " << c.obj_name(o) << " = " << c.mor_name(c.identity(o)) << "\n";
  for (MorId g = 0; g < c.n_morphisms(); ++g)
    for (MorId f = 0; f < c.n_morphisms(); ++f)
      if (c.composable(g, f))
        os << "compose " << c.mor_name(g) << " . " << c.mor_name(f) << " = "
           << c.mor_name(c.try_compose(g, f)) << "\n";
  if (ideal) {
    os << "null {";
    for (MorId m = 0; m < c.n_morphisms(); ++m)
      if (ideal->contains(m)) os << " " << c.mor_name(m);
    os << " }\n";
  }
  return os.str();
}

}  // namespace sextor
