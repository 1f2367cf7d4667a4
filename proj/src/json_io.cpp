#include "adlv/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace adlv {

using nlohmann::json;

json to_json(const FiniteElement& w) { return json(reduced_word(w)); }

json to_json(const AffineElement& x) {
  json j;
  j["lambda"] = x.lambda().coords;
  j["word"] = reduced_word(x.finite_part());
  return j;
}

json to_json(const ReductionCertificate& cert) {
  json j;
  j["group"] = cert.start().group().name();
  j["lambda"] = cert.start().lambda().coords;
  j["word"] = reduced_word(cert.start().finite_part());
  j["kappa"] = cert.kappa().value;
  json steps = json::array();
  for (const ReductionStep& step : cert.steps()) {
    json s;
    s["gen"] = step.generator;
    s["case"] = case_name(step.label);
    s["lengths"] = {step.lengths.lx, step.lengths.lsx, step.lengths.lxs,
                    step.lengths.lsxs};
    s["after"] = to_json(step.after);
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  j["terminal"] = to_json(cert.terminal());
  j["elliptic"] = cert.terminal_elliptic();
  return j;
}

json to_json(const VerificationReport& report) {
  json j;
  j["lemma"] = report.lemma;
  j["group"] = report.group;
  j["checked"] = report.checked;
  j["counterexamples"] = report.counterexamples;
  if (report.skipped) {
    j["skipped"] = true;
    j["note"] = report.note;
  }
  return j;
}

AffineElement affine_from_json(const std::shared_ptr<const Group>& group, const json& j) {
  Cocharacter lambda{j.at("lambda").get<IntVec>()};
  Word word = j.at("word").get<Word>();
  return AffineElement(group, lambda, group->weyl().from_word(word));
}

ReductionCertificate certificate_from_json(const json& j) {
  auto group = Group::from_name(j.at("group").get<std::string>());
  AffineElement start = affine_from_json(group, j);
  std::vector<ReductionStep> steps;
  AffineElement cur = start;
  for (const json& s : j.at("steps")) {
    int gen = s.at("gen").get<int>();
    CaseLabel label = case_from_name(s.at("case").get<std::string>());
    auto lens = s.at("lengths").get<std::vector<long long>>();
    if (lens.size() != 4) throw std::invalid_argument("lengths must have four entries");
    AffineElement after = affine_from_json(group, s.at("after"));
    steps.push_back({cur, gen, after, label, {lens[0], lens[1], lens[2], lens[3]}});
    cur = after;
  }
  AffineElement terminal = affine_from_json(group, j.at("terminal"));
  bool elliptic = j.at("elliptic").get<bool>();
  ReductionCertificate cert(start, std::move(steps), terminal, elliptic);
  if (j.at("kappa").get<long long>() != cert.kappa().value)
    throw std::invalid_argument("stored kappa does not match the start element");
  return cert;
}

namespace {

std::string strip(const std::string& text) {
  auto begin = text.find_first_not_of(" \t");
  auto end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) return "";
  return text.substr(begin, end - begin + 1);
}

}  // namespace

Word parse_word(const std::string& text) {
  std::string body = strip(text);
  Word word;
  if (body.empty() || body == "e") return word;
  if (body.find_first_of(" \t,") != std::string::npos) {
    std::string normalized = body;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream is(normalized);
    int g;
    while (is >> g) word.push_back(g);
    if (!is.eof()) throw std::invalid_argument("bad generator word: " + text);
    return word;
  }
  for (char c : body) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
      throw std::invalid_argument("bad generator word: " + text);
    word.push_back(c - '0');
  }
  return word;
}

FiniteElement parse_finite(const std::string& text, const CoxeterSystem& W) {
  std::string body = strip(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw std::invalid_argument("unterminated one-line form");
    std::string inner = body.substr(1, body.size() - 2);
    std::replace(inner.begin(), inner.end(), ',', ' ');
    std::istringstream is(inner);
    std::vector<int> oneline;
    int v;
    while (is >> v) oneline.push_back(v);
    return W.from_oneline(oneline);
  }
  return W.from_word(parse_word(body));
}

Cocharacter parse_cocharacter(const std::string& text) {
  std::string body = strip(text);
  std::replace(body.begin(), body.end(), ',', ' ');
  std::istringstream is(body);
  IntVec coords;
  int v;
  while (is >> v) coords.push_back(v);
  if (!is.eof() || coords.empty())
    throw std::invalid_argument("bad cocharacter: " + text);
  return {coords};
}

AffineElement parse_affine(const std::string& text, const std::shared_ptr<const Group>& group) {
  // t[<cocharacter>] * w[<word>]
  auto tpos = text.find("t[");
  if (tpos == std::string::npos) throw std::invalid_argument("expected t[...]: " + text);
  auto tend = text.find(']', tpos);
  if (tend == std::string::npos) throw std::invalid_argument("unterminated t[...]");
  auto wpos = text.find("w[", tend);
  if (wpos == std::string::npos) throw std::invalid_argument("expected w[...]: " + text);
  auto wend = text.find(']', wpos);
  if (wend == std::string::npos) throw std::invalid_argument("unterminated w[...]");
  Cocharacter lambda = parse_cocharacter(text.substr(tpos + 2, tend - tpos - 2));
  Word word = parse_word(text.substr(wpos + 2, wend - wpos - 2));
  return AffineElement(group, lambda, group->weyl().from_word(word));
}

}  // namespace adlv
