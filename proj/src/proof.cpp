#include "varcross/proof.hpp"

#include <cctype>
#include <set>

#include "varcross/error.hpp"
#include "varcross/family.hpp"

namespace varcross {

  namespace {

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    std::string_view strip_comment(std::string_view s) {
      bool quoted = false;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') {
          quoted = !quoted;
        } else if (s[i] == '#' && !quoted) {
          return s.substr(0, i);
        }
      }
      return s;
    }

    std::vector<std::string> tokenize(std::string_view s, std::size_t line) {
      std::vector<std::string> out;
      std::size_t              i = 0;
      while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
          ++i;
          continue;
        }
        std::string tok;
        bool        quoted = false;
        while (i < s.size() && (quoted || !std::isspace(static_cast<unsigned char>(s[i])))) {
          if (s[i] == '"') {
            quoted = !quoted;
          }
          tok += s[i++];
        }
        if (quoted) {
          throw ParseError("unterminated quote", i, line);
        }
        out.push_back(std::move(tok));
      }
      return out;
    }

    bool is_assignment(std::string const& tok) {
      auto eq = tok.find("=\"");
      return eq != std::string::npos && eq > 0 && tok.back() == '"' && tok.size() >= eq + 3;
    }

    std::string quoted_value(std::string const& tok) {
      auto eq = tok.find("=\"");
      return tok.substr(eq + 2, tok.size() - eq - 3);
    }

    class ScriptParser {
     public:
      ScriptParser(std::string_view text, AxiomResolver const& resolver)
          : _text(text), _resolver(resolver) {}

      ProofScript parse() {
        enum { none, axioms, chain } section = none;
        bool        have_start                = false;
        std::size_t line_no                   = 0;
        std::size_t pos                       = 0;
        while (pos <= _text.size()) {
          auto end = _text.find('\n', pos);
          if (end == std::string_view::npos) {
            end = _text.size();
          }
          auto raw = _text.substr(pos, end - pos);
          pos      = end + 1;
          ++line_no;
          auto line = trim(strip_comment(raw));
          if (line.empty()) {
            continue;
          }
          if (line == "axioms:") {
            section = axioms;
            continue;
          }
          if (line == "chain:") {
            if (have_start) {
              throw ParseError("a script has exactly one chain", 0, line_no);
            }
            section = chain;
            continue;
          }
          switch (section) {
            case none:
              throw ParseError("expected 'axioms:' or 'chain:'", 0, line_no);
            case axioms:
              axiom_line(line, line_no);
              break;
            case chain:
              if (!have_start) {
                if (line.substr(0, 2) == "->") {
                  throw ParseError("chain must start with a word", 0, line_no);
                }
                _script.start = word_at(line, line_no);
                have_start    = true;
              } else {
                step_line(line, line_no);
              }
              break;
          }
        }
        if (!have_start) {
          throw ParseError("script has no chain", 0, line_no);
        }
        return std::move(_script);
      }

     private:
      Word word_at(std::string_view text, std::size_t line) {
        try {
          return parse_word(text);
        } catch (ParseError const& e) {
          throw ParseError(e.message(), e.position(), line);
        }
      }

      void axiom_line(std::string_view line, std::size_t line_no) {
        auto colon = line.find(':');
        if (colon == std::string_view::npos) {
          if (line.find('=') == std::string_view::npos && line.find("\xE2\x89\x88") == std::string_view::npos) {
            require(std::string(line), line_no);
            return;
          }
          add(identity_at(line, "", line_no), line_no);
          return;
        }
        auto label = std::string(trim(line.substr(0, colon)));
        if (label.empty() || label.find(' ') != std::string::npos) {
          throw ParseError("bad axiom label", 0, line_no);
        }
        add(identity_at(trim(line.substr(colon + 1)), label, line_no), line_no);
      }

      Identity identity_at(std::string_view text, std::string label, std::size_t line) {
        try {
          return parse_identity(text, std::move(label));
        } catch (ParseError const& e) {
          throw ParseError(e.message(), e.position(), line);
        }
      }

      void add(Identity idy, std::size_t line_no) {
        if (_script.axioms.find(idy.label) != nullptr) {
          throw LookupError("line " + std::to_string(line_no) + ": duplicate axiom label '" + idy.label + "'");
        }
        _script.axioms.add(std::move(idy));
      }

      // Makes `label` available, resolving it from families or the resolver.
      void require(std::string const& label, std::size_t line_no) {
        if (_script.axioms.find(label) != nullptr) {
          return;
        }
        if (auto spec = parse_family_label(label); spec && spec->family != Family::l_chain_word) {
          try {
            _script.axioms.add(family_identity(*spec));
            return;
          } catch (std::invalid_argument const& e) {
            throw LookupError("line " + std::to_string(line_no) + ": " + label + ": " + e.what());
          }
        }
        if (_resolver) {
          if (auto idy = _resolver(label)) {
            idy->label = label;
            _script.axioms.add(std::move(*idy));
            return;
          }
        }
        throw LookupError("line " + std::to_string(line_no) + ": unknown axiom label '" + label + "'");
      }

      void step_line(std::string_view line, std::size_t line_no) {
        if (line.substr(0, 2) != "->") {
          throw ParseError("step lines start with '->'", 0, line_no);
        }
        auto        toks = tokenize(line.substr(2), line_no);
        std::size_t via  = toks.size();
        for (std::size_t k = 0; k < toks.size(); ++k) {
          if (toks[k] != "via" || k < 2 || toks[k - 2] != "by") {
            continue;
          }
          bool tail_ok = true;
          for (std::size_t r = k + 1; r < toks.size(); ++r) {
            tail_ok = tail_ok && (toks[r] == "phi:" || is_assignment(toks[r]));
          }
          if (tail_ok) {
            via = k;
            break;
          }
        }
        if (via < 3 || toks[via - 2] != "by") {
          throw ParseError("step needs 'by <label>'", 0, line_no);
        }
        ProofStep step;
        step.line  = line_no;
        step.label = toks[via - 1];
        std::string word_text;
        for (std::size_t k = 0; k + 2 < via; ++k) {
          word_text += toks[k] + ' ';
        }
        step.word = word_at(word_text, line_no);
        if (via < toks.size()) {
          DeductionWitness w;
          bool             in_phi = false;
          for (std::size_t r = via + 1; r < toks.size(); ++r) {
            if (toks[r] == "phi:") {
              in_phi = true;
              continue;
            }
            auto key   = toks[r].substr(0, toks[r].find('='));
            auto value = word_at(quoted_value(toks[r]), line_no);
            if (in_phi) {
              try {
                w.phi.assign(Variable::from_name(key), std::move(value));
              } catch (ParseError const& e) {
                throw ParseError(e.message(), 0, line_no);
              }
            } else if (key == "a") {
              w.prefix = std::move(value);
            } else if (key == "b") {
              w.suffix = std::move(value);
            } else {
              throw ParseError("unknown via key '" + key + "'", 0, line_no);
            }
          }
          step.via = std::move(w);
        }
        require(step.label, line_no);
        _script.steps.push_back(std::move(step));
      }

      std::string_view     _text;
      AxiomResolver const& _resolver;
      ProofScript          _script;
    };

  }  // namespace

  ProofScript parse_proof_script(std::string_view text, AxiomResolver const& resolver) {
    return ScriptParser(text, resolver).parse();
  }

  ProofReport verify_proof_script(ProofScript const& ps, ProofOptions const& opts) {
    ProofReport    report;
    std::set<Word> seen{ps.start};
    Word           prev = ps.start;
    bool           failed = false, unsure = false;
    for (std::size_t i = 0; i < ps.steps.size(); ++i) {
      auto const& step = ps.steps[i];
      StepReport  sr;
      sr.index          = i + 1;
      sr.line           = step.line;
      sr.label          = step.label;
      auto const* axiom = ps.axioms.find(step.label);
      if (axiom == nullptr) {
        sr.decision = Decision::no;
        sr.message  = "unknown axiom label '" + step.label + "'";
      } else if (step.via) {
        // A supplied witness is checked as written; both orientations count.
        DeductionWitness w = *step.via;
        w.swapped          = false;
        bool ok            = check_witness(prev, step.word, *axiom, w);
        if (!ok) {
          w.swapped = true;
          ok        = check_witness(prev, step.word, *axiom, w);
        }
        sr.decision = ok ? Decision::yes : Decision::no;
        if (ok) {
          sr.witness = w;
        } else {
          sr.message = "supplied witness does not reproduce the step";
        }
      } else {
        auto r      = directly_deducible(prev, step.word, *axiom, opts.budget);
        sr.decision = r.decision;
        sr.witness  = r.witness;
        if (r.decision == Decision::no) {
          sr.message = "not directly deducible from " + step.label;
        } else if (r.decision == Decision::inconclusive) {
          sr.message = "search budget exhausted after " + std::to_string(r.nodes) + " nodes";
        }
      }
      if (!seen.insert(step.word).second) {
        std::string msg = "step " + std::to_string(i + 1) + " repeats the word " + step.word.to_string();
        if (opts.lax) {
          report.warnings.push_back(msg);
        } else {
          report.errors.push_back(msg);
          failed = true;
        }
      }
      failed = failed || sr.decision == Decision::no;
      unsure = unsure || sr.decision == Decision::inconclusive;
      report.steps.push_back(std::move(sr));
      prev = step.word;
    }
    report.conclusion = Identity(ps.start, prev);
    report.decision   = failed ? Decision::no : unsure ? Decision::inconclusive : Decision::yes;
    return report;
  }

  std::string ProofReport::to_string() const {
    std::string out;
    for (auto const& s : steps) {
      out += "step " + std::to_string(s.index) + " (line " + std::to_string(s.line) + ") by " + s.label + ": ";
      out += std::string(varcross::to_string(s.decision) == "yes" ? "ok" : varcross::to_string(s.decision));
      if (s.witness) {
        out += "  " + s.witness->to_string();
      }
      if (!s.message.empty()) {
        out += "  " + s.message;
      }
      out += '\n';
    }
    for (auto const& w : warnings) {
      out += "warning: " + w + '\n';
    }
    for (auto const& e : errors) {
      out += "error: " + e + '\n';
    }
    switch (decision) {
      case Decision::yes:
        out += "valid: ";
        break;
      case Decision::no:
        out += "invalid: ";
        break;
      case Decision::inconclusive:
        out += "inconclusive: ";
        break;
    }
    out += conclusion.lhs.to_pretty_string() + " = " + conclusion.rhs.to_pretty_string() + " in "
           + std::to_string(steps.size()) + " step" + (steps.size() == 1 ? "" : "s") + '\n';
    return out;
  }

}  // namespace varcross
