#include <sstream>
#include <stdexcept>

#include "wcp/admissible.hpp"

namespace wcp {

// ---------------------------------------------------------------------------
// Structured-text fixtures, one block per (type, i).  Vectors are coordinate
// lists: lambda in the simple-coroot basis, betas and images in the
// simple-root basis.  "x:" takes simple-reflection letters and an optional
// trailing power of w^J.

namespace {

const std::vector<std::string> kFixtures = {
    R"(case G2 1
v: 1
x: wJ^1
lambda: 1 0
scale: 1
y1: 2
mode: integral
)",
    R"(case G2 2
v: 2
x: wJ^1
lambda: 0 1
scale: 1
y1: 1
mode: integral
)",
    R"(case F4 1
v: 2
x: 1 4 wJ^2
lambda: 0 1 0 0
scale: 1
y1: 1 3
y2: 4
beta 4: 0 -1 -1 0
image w2 wJ^0 beta 1: 0 -1 -2 -1
mode: integral
)",
    R"(case F4 2
v: 1 3
x: 2 wJ^2
lambda: 1 0 1 0
scale: 1
y1: 2 4
mode: integral
)",
    R"(case F4 3
v: 2 4
x: 3 wJ^2
lambda: 0 2 0 1
scale: 1
y1: 1 3
mode: integral
)",
    R"(case F4 4
v: 3
x: 1 4 wJ^2
lambda: 0 0 1 0
scale: 1
y1: 2 4
y2: 1
beta 1: 0 -1 -2 0
image w2 wJ^0 beta 1: -1 -2 -2 0
mode: integral
note: transcription reads lambda = x omega^vee_1; the case needs omega^vee_4 and is checked so
)",
    R"(case E6 1
v: 1 5 3 6
x: 1 4 3 1 6 wJ^1
lambda: 1 0 2 0 1 2
scale: 3
y1: 4
y2: 2
beta 2: 0 0 -1 -1 -1 0
image w2 wJ^0 beta 1: 0 -1 -1 -2 -1 -1
mode: integral
)",
    R"(case E6 2
v: 4
x: 2 3 5 4 2 wJ^1
lambda: 0 0 0 1 0 0
scale: 1
y1: 2 3 5
y2: 1 6
beta 1: 0 0 0 -1 -1 0
beta 6: 0 0 -1 -1 0 0
image w2 wJ^0 beta 1: 0 0 -1 -1 -1 -1
image w2 wJ^0 beta 2: -1 0 -1 -1 -1 0
mode: integral
note: transcription reads lambda = x omega^vee_1; the case needs omega^vee_2 and is checked so
)",
    R"(case E6 3
v: 3 6 1 4 5
x: 2 3 4 1 3 wJ^1
lambda: 2 0 1 3 5 1
scale: 3
y1: 2
mode: integral
)",
    R"(case E6 4
v: 2 3 5
x: 4 wJ^2
lambda: 0 1 1 0 1 0
scale: 1
y1: 1 4 6
mode: integral
note: transcription prints lambda = av2 + av3 + 5 av5 = x omega^vee_3; the case needs x omega^vee_4, which equals av2 + av3 + av5, so the coefficient 5 and the index 3 are read as slips
)",
    R"(case E7 1
v: 4
x: 3 1 2 5 4 3 1 7 wJ^2
lambda: 0 0 0 1 0 0 0
scale: 1
y1: 3 2 5
y2: 1 6 7
beta 1: 0 0 -1 -1 -1 -1 0
beta 6: 0 0 0 -1 -1 0 0
beta 7: 0 -1 -1 -1 0 0 0
image w2 wJ^0 beta 1: 0 -1 -1 -2 -1 -1 -1
image w2 wJ^0 beta 2: 0 -1 -1 -1 -1 -1 0
image w3 wJ^-1 beta 3: 0 -1 0 -1 -1 -1 0
mode: integral
)",
    R"(case E7 2
v: 2 3 5 7
x: 4 2 7 wJ^3
lambda: 0 1 2 0 1 0 1
scale: 2
y1: 1 4 6
mode: integral
)",
    R"(case E7 3
v: 2 3 5
x: 1 4 3 7 wJ^3
lambda: 0 1 1 0 1 0 0
scale: 1
y1: 1 4 6
y2: 7
beta 7: 0 0 0 -1 -1 0 0
image w2 wJ^0 beta 1: 0 -1 0 -1 -1 -1 0
mode: integral
note: transcription names three root subgroups U_{b3} U_{b2} U_{b1} but defines a single beta; one beta recorded
)",
    R"(case E7 4
v: 1 4 6
x: 2 3 5 4 wJ^3
lambda: 1 0 0 2 0 1 0
scale: 1
y1: 2 3 5 7
mode: integral
)",
    R"(case E7 5
v: 2 3 5 7
x: 4 6 5 wJ^3
lambda: 0 1 2 0 3 0 1
scale: 2
y1: 1 4 6
mode: integral
)",
    R"(case E7 6
v: 4 6
x: 1 5 7 6 wJ^3
lambda: 0 0 0 1 0 1 0
scale: 1
y1: 2 3 5 7
y2: 1
beta 1: 0 0 -1 -1 -1 0 0
image w2 wJ^0 beta 1: -1 -1 -1 -2 -1 0 0
mode: integral
)",
    R"(case E7 7
v: 2 5 7
x: 6 7 4 5 6 7 1 wJ^2
lambda: 0 1 0 0 1 0 1
scale: 2
y1: 4 6
y2: 3 1
beta 3: 0 0 -1 -1 -1 0 0
beta 1: 0 -1 0 -1 -1 -1 0
image w2 wJ^0 beta 1: -1 -1 -1 -2 -1 -1 0
image w3 wJ^-1 beta 2: -1 -1 -1 -2 -1 0 0
mode: integral
)",
    R"(case E8 1
v: 4 6
x: 3 1 2 5 4 3 1 8 wJ^5
lambda: 0 0 0 1 0 1 0 0
scale: 1
y1: 2 3 5 7
y2: 1 8
beta 1: 0 -1 -1 -2 -1 -1 0 0
beta 8: 0 0 -1 -1 -1 -1 -1 0
image w2 wJ^0 beta 1: 0 -1 -1 -2 -2 -1 -1 0
image w2 wJ^0 beta 2: 0 -1 -1 -2 -1 -1 -1 -1
mode: integral
)",
    R"(case E8 2
v: 2 3 5 7
x: 4 2 7 8 wJ^6
lambda: 0 1 1 0 1 0 1 0
scale: 1
y1: 1 4 6 8
mode: integral
)",
    R"(case E8 3
v: 2 3 5 7
x: 1 4 3 7 8 wJ^6
lambda: 0 1 1 0 2 0 1 0
scale: 1
y1: 1 4 6 8
mode: integral
)",
    R"(case E8 4
v: 1 4 6 8
x: 2 5 3 4 8 wJ^6
lambda: 1 0 0 3 0 2 0 1
scale: 1
y1: 2 3 5 7
mode: integral
)",
    R"(case E8 5
v: 2 3 5 7
x: 4 6 5 wJ^6
lambda: 0 1 2 0 2 0 1 0
scale: 1
y1: 1 4 6 8
mode: integral
)",
    R"(case E8 6
v: 1 4 6
x: 1 5 7 6 wJ^6
lambda: 1 0 0 2 0 1 0 0
scale: 1
y1: 2 3 5 7
y2: 8
beta 8: ?
image w2 wJ^0 beta 1: -1 -1 -1 -2 -1 0 0 0
mode: integral
note: no transcribed value for beta; only its image under w_2^-1 is recorded
)",
    R"(case E8 7
v: 2 3 5
x: 6 7 8 4 5 6 7 wJ^5
lambda: 0 1 1 0 1 0 0 0
scale: 1
y1: 1 4 6
y2: 7 8
beta 7: 0 0 -1 -1 -1 0 0 0
beta 8: 0 -1 0 -1 -1 -1 0 0
image w2 wJ^0 beta 1: -1 -1 -1 -2 -1 -1 0 0
image w3 wJ^-1 beta 2: -1 -1 -1 -2 -1 0 0 0
mode: integral
)",
    R"(case E8 8
v: 4
x: 1 5 6 7 8 wJ^5
lambda: 0 0 0 1 0 0 0 0
scale: 1
y1: 5 2 3
y2: 1 6 7 8
beta 1: 0 -1 -1 -2 -1 -1 -1 0
beta 6: 0 0 -1 -1 -1 0 0 0
beta 7: wJ^1 beta 2
beta 8: wJ^2 beta 2
image w2 wJ^0 beta 1: -1 -1 -2 -2 -2 -2 -1 0
image w2 wJ^0 beta 2: -1 -1 -1 -2 -1 -1 -1 0
image w3 wJ^-1 beta 3: -1 -1 -1 -2 -1 -1 0 0
image w4 wJ^-2 beta 4: -1 -1 -1 -2 -1 0 0 0
mode: integral
)",
};

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

RootVec parse_root_vec(const std::vector<std::string>& toks, size_t from) {
  RootVec v;
  for (size_t k = from; k < toks.size(); ++k) v.push_back(std::stoi(toks[k]));
  return v;
}

Rat parse_rat(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

int parse_power(const std::string& tok) { // "wJ^-2" -> -2
  if (tok.rfind("wJ^", 0) != 0) throw std::invalid_argument("bad power token: " + tok);
  return std::stoi(tok.substr(3));
}

} // namespace

const std::vector<std::string>& exceptional_case_fixtures() { return kFixtures; }

CaseData parse_case_fixture(const std::string& text) {
  CaseData cd;
  std::stringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    const auto colon = line.find(':');
    std::string head = colon == std::string::npos ? line : line.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : line.substr(colon + 1);
    const auto head_toks = split_ws(head);
    const auto toks = split_ws(rest);
    if (head_toks.empty()) continue;
    const std::string& key = head_toks[0];
    if (key == "case") {
      cd.type = SeriesRank::parse(head_toks.at(1));
      cd.i = std::stoi(head_toks.at(2));
    } else if (key == "v") {
      for (const auto& t : toks)
        if (t != "-") cd.v_word.push_back(std::stoi(t));
    } else if (key == "x") {
      for (const auto& t : toks) {
        if (t == "-") continue;
        if (t.rfind("wJ^", 0) == 0) cd.x_power = parse_power(t);
        else cd.x_word.push_back(std::stoi(t));
      }
    } else if (key == "lambda") {
      for (const auto& t : toks) cd.lambda.push_back(parse_rat(t));
    } else if (key == "scale") {
      cd.scale = parse_rat(toks.at(0));
    } else if (key == "y1") {
      for (const auto& t : toks)
        if (t != "-") cd.y1.push_back(std::stoi(t));
    } else if (key == "y2") {
      for (const auto& t : toks)
        if (t != "-") cd.y2.push_back(std::stoi(t));
    } else if (key == "beta") {
      BetaEntry b;
      b.source = std::stoi(head_toks.at(1));
      if (!toks.empty() && toks[0] == "?") {
        // transcribed without a value
      } else if (!toks.empty() && toks[0].rfind("wJ^", 0) == 0) {
        b.power = parse_power(toks.at(0));
        if (toks.at(1) != "beta") throw std::invalid_argument("bad beta reference");
        b.ref = std::stoi(toks.at(2));
      } else {
        b.has_literal = true;
        b.literal = parse_root_vec(toks, 0);
      }
      cd.betas.push_back(std::move(b));
    } else if (key == "image") {
      ClaimedRootImage im;
      if (head_toks.at(1).rfind('w', 0) != 0 || head_toks.at(3) != "beta")
        throw std::invalid_argument("bad image header: " + head);
      im.wk = std::stoi(head_toks.at(1).substr(1));
      im.power = parse_power(head_toks.at(2));
      im.beta = std::stoi(head_toks.at(4));
      im.expected = parse_root_vec(toks, 0);
      cd.images.push_back(std::move(im));
    } else if (key == "mode") {
      if (toks.at(0) == "integral") cd.mode = AdmMode::Integral;
      else if (toks.at(0) == "rational") cd.mode = AdmMode::Rational;
      else throw std::invalid_argument("bad mode: " + toks.at(0));
    } else if (key == "note") {
      std::string note = rest;
      if (!note.empty() && note[0] == ' ') note.erase(0, 1);
      cd.notes.push_back(note);
    } else {
      throw std::invalid_argument("unknown fixture key: " + key);
    }
  }
  if (!cd.type.valid() || cd.i == 0) throw std::invalid_argument("fixture without case header");
  return cd;
}

std::string CaseData::str() const {
  std::ostringstream out;
  out << "case " << type.str()[0] << type.rank << " " << i << "\n";
  out << "v: " << word_str(v_word) << "\n";
  out << "x: " << word_str(x_word);
  if (x_power != 0) out << " wJ^" << x_power;
  out << "\n";
  out << "lambda:";
  for (const Rat& c : lambda) out << " " << c.str();
  out << "\nscale: " << scale.str() << "\n";
  if (!y1.empty()) out << "y1: " << word_str(y1) << "\n";
  if (!y2.empty()) out << "y2: " << word_str(y2) << "\n";
  for (const BetaEntry& b : betas) {
    out << "beta " << b.source << ":";
    if (b.has_literal) {
      for (int c : b.literal) out << " " << c;
    } else if (b.ref >= 1) {
      out << " wJ^" << b.power << " beta " << b.ref;
    } else {
      out << " ?";
    }
    out << "\n";
  }
  for (const ClaimedRootImage& im : images) {
    out << "image w" << im.wk << " wJ^" << im.power << " beta " << im.beta << ":";
    for (int c : im.expected) out << " " << c;
    out << "\n";
  }
  out << "mode: " << (mode == AdmMode::Integral ? "integral" : "rational") << "\n";
  for (const std::string& n : notes) out << "note: " << n << "\n";
  return out.str();
}

} // namespace wcp
