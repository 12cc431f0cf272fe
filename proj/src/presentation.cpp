#include "dehnlab/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace dehnlab {

std::size_t Presentation::max_relator_length() const {
  std::size_t m = 0;
  for (const auto& r : relators) {
    m = std::max(m, r.size());
  }
  return m;
}

std::vector<Word> symmetrize(const std::vector<Word>& relators) {
  std::vector<Word> out;
  for (const auto& raw : relators) {
    Word r = cyclically_reduce(raw);
    if (r.empty()) {
      continue;
    }
    Word ri = invert(r);
    for (std::size_t k = 0; k < r.size(); ++k) {
      out.push_back(rotate(r, k));
      out.push_back(rotate(ri, k));
    }
  }
  std::sort(out.begin(), out.end(), word_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Word orbit_representative(const Word& w) {
  Word r = cyclically_reduce(w);
  if (r.empty()) {
    return r;
  }
  Word best = r;
  Word ri = invert(r);
  for (std::size_t k = 0; k < r.size(); ++k) {
    for (const Word* cand : {&r, &ri}) {
      Word rot = rotate(*cand, k);
      if (word_less(rot, best)) {
        best = rot;
      }
    }
  }
  return best;
}

Presentation build_presentation(int num_generators,
                                const std::vector<Word>& raw_relators,
                                std::string alphabet) {
  if (num_generators < 0 ||
      num_generators > static_cast<int>(Word::kFullAlphabet.size())) {
    throw std::invalid_argument("generator count must be in [0, 26]");
  }
  if (alphabet.empty()) {
    alphabet = std::string(
        Word::kFullAlphabet.substr(0, static_cast<std::size_t>(num_generators)));
  }
  if (static_cast<int>(alphabet.size()) != num_generators) {
    throw std::invalid_argument("alphabet size does not match generator count");
  }

  for (std::size_t i = 0; i < raw_relators.size(); ++i) {
    for (std::size_t j = 0; j < raw_relators[i].size(); ++j) {
      if (raw_relators[i][j].generator() >= num_generators) {
        throw std::invalid_argument("relator " + std::to_string(i) +
                                    " uses a letter outside the alphabet");
      }
    }
    if (cyclically_reduce(raw_relators[i]).empty() && !raw_relators[i].empty()) {
      std::cerr << "warning: relator " << i
                << " is trivial in the free group, dropped\n";
    } else if (raw_relators[i].empty()) {
      std::cerr << "warning: relator " << i << " is empty, dropped\n";
    }
  }

  Presentation p;
  p.num_generators = num_generators;
  p.alphabet = std::move(alphabet);
  p.relators = symmetrize(raw_relators);
  p.relator_length_sum = 0;
  for (const auto& r : p.relators) {
    p.relator_length_sum += static_cast<std::int64_t>(r.size());
  }
  p.identities.reserve(2 * static_cast<std::size_t>(num_generators) +
                       p.relators.size());
  for (int g = 0; g < num_generators; ++g) {
    Letter x(g, +1);
    Word xX(std::vector<std::int8_t>{x.code(), x.inverse().code()});
    Word Xx(std::vector<std::int8_t>{x.inverse().code(), x.code()});
    p.identities.push_back(xX);
    p.identities.push_back(Xx);
  }
  p.identities.insert(p.identities.end(), p.relators.begin(), p.relators.end());
  return p;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream iss(line);
  std::string t;
  while (iss >> t) {
    toks.push_back(t);
  }
  return toks;
}

}  // namespace

PresentationFile parse_presentation(std::istream& in) {
  std::string alphabet;
  std::vector<Word> raw_relators;
  PresentationFile file;
  std::vector<Word> priv;
  std::string line;
  int lineno = 0;
  bool have_gens = false;

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    auto toks = tokenize(line);
    if (toks.empty()) {
      continue;
    }
    const std::string& kw = toks[0];
    auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
    if (kw == "gens") {
      if (have_gens) {
        throw std::invalid_argument("duplicate gens directive" + where());
      }
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].size() != 1 || toks[i][0] < 'a' || toks[i][0] > 'z') {
          throw std::invalid_argument("generator must be a single lowercase letter" + where());
        }
        if (alphabet.find(toks[i][0]) != std::string::npos) {
          throw std::invalid_argument("duplicate generator letter" + where());
        }
        alphabet.push_back(toks[i][0]);
      }
      have_gens = true;
    } else if (kw == "rel" || kw == "sub" || kw == "priv" || kw == "w0" ||
               kw == "w1") {
      if (!have_gens) {
        throw std::invalid_argument("directive before gens" + where());
      }
      if (toks.size() != 2) {
        throw std::invalid_argument("expected exactly one word after " + kw + where());
      }
      Word w = Word::parse(toks[1], alphabet);
      if (kw == "rel") {
        raw_relators.push_back(std::move(w));
      } else if (kw == "sub") {
        file.subgroup_generators.push_back(std::move(w));
      } else if (kw == "priv") {
        priv.push_back(std::move(w));
      } else if (kw == "w0") {
        file.w0 = std::move(w);
      } else {
        file.w1 = std::move(w);
      }
    } else {
      throw std::invalid_argument("unknown directive '" + kw + "'" + where());
    }
  }
  if (!have_gens) {
    throw std::invalid_argument("missing gens directive");
  }
  file.presentation = build_presentation(static_cast<int>(alphabet.size()),
                                         raw_relators, alphabet);
  file.private_relators = symmetrize(priv);
  return file;
}

PresentationFile parse_presentation_text(const std::string& text) {
  std::istringstream iss(text);
  return parse_presentation(iss);
}

PresentationFile load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open presentation file: " + path);
  }
  return parse_presentation(in);
}

std::string serialize_presentation(const PresentationFile& file) {
  const Presentation& p = file.presentation;
  std::ostringstream out;
  out << "gens";
  for (char c : p.alphabet) {
    out << ' ' << c;
  }
  out << '\n';

  auto orbit_reps = [&](const std::vector<Word>& symmetrized) {
    std::vector<Word> reps;
    for (const auto& r : symmetrized) {
      Word rep = orbit_representative(r);
      if (rep == r) {
        reps.push_back(rep);
      }
    }
    std::sort(reps.begin(), reps.end(), word_less);
    return reps;
  };

  for (const auto& r : orbit_reps(p.relators)) {
    out << "rel " << r.str(p.alphabet) << '\n';
  }
  for (const auto& s : file.subgroup_generators) {
    out << "sub " << s.str(p.alphabet) << '\n';
  }
  for (const auto& r : orbit_reps(file.private_relators)) {
    out << "priv " << r.str(p.alphabet) << '\n';
  }
  if (file.w0) {
    out << "w0 " << file.w0->str(p.alphabet) << '\n';
  }
  if (file.w1) {
    out << "w1 " << file.w1->str(p.alphabet) << '\n';
  }
  return out.str();
}

}  // namespace dehnlab
