// Copyright 2026 discopile contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "discopile/diagram.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "discopile/errors.hpp"

namespace discopile {

Diagram diagram_from_sentence(const std::vector<std::string>& tokens,
                              const Lexicon& lex) {
  PregroupType t = type_of_sentence(tokens, lex);
  if (!is_grammatical(t)) {
    throw NotGrammaticalError("type " + format_type(t) +
                              " does not reduce to s");
  }

  Diagram d;
  int wire = 0;
  for (const auto& token : tokens) {
    WordBox box;
    box.token = token;
    box.type = lex.entries.at(token);
    for (const auto& factor : box.type.factors) {
      box.output_wires.push_back(wire++);
      d.wire_types.push_back(factor);
    }
    d.words.push_back(std::move(box));
  }

  ReductionTrace tr = reduce(t);
  for (const auto& [a, b] : tr.cups) {
    d.wiring.generators.push_back(Cup{a, b});
  }
  for (int leftover : tr.leftovers) {
    d.wiring.open.push_back(OpenWire{leftover, d.wire_types[leftover]});
  }
  return d;
}

Diagram copy_noun(const Diagram& d, int word_index) {
  if (word_index < 0 || word_index >= static_cast<int>(d.words.size())) {
    throw NotANounError("word index " + std::to_string(word_index) +
                        " out of range");
  }
  const WordBox& box = d.words[word_index];
  int src = -1;
  for (std::size_t i = 0; i < box.type.factors.size(); ++i) {
    if (box.type.factors[i] == SimpleType{Base::N, 0}) {
      src = box.output_wires[i];
      break;
    }
  }
  if (src < 0) {
    throw NotANounError("word '" + box.token +
                        "' has no plain n output wire");
  }
  Diagram out = d;
  int copy = static_cast<int>(out.wire_types.size());
  out.wire_types.push_back(SimpleType{Base::N, 0});
  out.wiring.generators.push_back(CopySpider{src, copy});
  out.wiring.open.push_back(OpenWire{copy, SimpleType{Base::N, 0}});
  return out;
}

namespace {

bool is_spider_copy(const Diagram& d, int wire) {
  for (const auto& g : d.wiring.generators) {
    if (const auto* sp = std::get_if<CopySpider>(&g)) {
      if (sp->copy == wire) return true;
    }
  }
  return false;
}

bool is_open(const Diagram& d, int wire) {
  for (const auto& ow : d.wiring.open) {
    if (ow.wire == wire) return true;
  }
  return false;
}

}  // namespace

Diagram compose_two_sentence(const Diagram& d1, const Diagram& d2,
                             const std::vector<Bridge>& bridges) {
  std::set<int> bridged_wires;
  std::set<int> replaced_words;
  for (const auto& b : bridges) {
    if (b.d1_wire < 0 || b.d1_wire >= static_cast<int>(d1.wire_types.size()) ||
        d1.wire_types[b.d1_wire] != SimpleType{Base::N, 0} ||
        !is_open(d1, b.d1_wire) || !is_spider_copy(d1, b.d1_wire)) {
      throw TypeMismatchError("bridge source must be an open plain-n copy "
                              "wire of the first diagram");
    }
    if (b.d2_word < 0 || b.d2_word >= static_cast<int>(d2.words.size()) ||
        d2.words[b.d2_word].type.factors !=
            std::vector<SimpleType>{SimpleType{Base::N, 0}}) {
      throw TypeMismatchError("bridge target must be a single plain-n word "
                              "of the second diagram");
    }
    if (!bridged_wires.insert(b.d1_wire).second ||
        !replaced_words.insert(b.d2_word).second) {
      throw TypeMismatchError("bridges must use distinct wires and words");
    }
  }

  // d1 keeps its wire ids; d2 wires are renumbered after them, except wires
  // of replaced word boxes, which collapse onto their bridge source.
  int n1 = static_cast<int>(d1.wire_types.size());
  std::vector<int> remap(d2.wire_types.size(), -1);
  for (const auto& b : bridges) {
    remap[d2.words[b.d2_word].output_wires[0]] = b.d1_wire;
  }
  Diagram out;
  out.words = d1.words;
  out.wire_types = d1.wire_types;
  int next = n1;
  for (std::size_t w = 0; w < d2.wire_types.size(); ++w) {
    if (remap[w] >= 0) continue;
    remap[w] = next++;
    out.wire_types.push_back(d2.wire_types[w]);
  }
  for (std::size_t i = 0; i < d2.words.size(); ++i) {
    if (replaced_words.count(static_cast<int>(i))) continue;
    WordBox box = d2.words[i];
    for (auto& w : box.output_wires) w = remap[w];
    out.words.push_back(std::move(box));
  }
  out.wiring.generators = d1.wiring.generators;
  for (const auto& g : d2.wiring.generators) {
    if (const auto* cup = std::get_if<Cup>(&g)) {
      out.wiring.generators.push_back(Cup{remap[cup->a], remap[cup->b]});
    } else if (const auto* sp = std::get_if<CopySpider>(&g)) {
      out.wiring.generators.push_back(
          CopySpider{remap[sp->src], remap[sp->copy]});
    } else {
      const auto& sw = std::get<Swap>(g);
      out.wiring.generators.push_back(Swap{remap[sw.a], remap[sw.b]});
    }
  }
  for (const auto& ow : d1.wiring.open) {
    if (bridged_wires.count(ow.wire)) continue;
    out.wiring.open.push_back(ow);
  }
  for (const auto& ow : d2.wiring.open) {
    out.wiring.open.push_back(OpenWire{remap[ow.wire], ow.type});
  }
  return out;
}

std::vector<std::string> validate(const Diagram& d) {
  std::vector<std::string> violations;
  int n = static_cast<int>(d.wire_types.size());
  auto in_range = [n](int w) { return w >= 0 && w < n; };

  for (const auto& box : d.words) {
    if (box.output_wires.size() != box.type.factors.size()) {
      violations.push_back("word '" + box.token +
                           "' wire count does not match its factor count");
      continue;
    }
    for (std::size_t i = 0; i < box.output_wires.size(); ++i) {
      int w = box.output_wires[i];
      if (!in_range(w)) {
        violations.push_back("word '" + box.token + "' references wire " +
                             std::to_string(w) + " out of range");
      } else if (d.wire_types[w] != box.type.factors[i]) {
        violations.push_back("word '" + box.token + "' wire " +
                             std::to_string(w) + " has the wrong type");
      }
      if (i > 0 && w != box.output_wires[i - 1] + 1) {
        violations.push_back("word '" + box.token +
                             "' output wires are not contiguous");
      }
    }
  }

  std::vector<Cup> cups;
  std::set<int> cupped;
  std::set<int> spider_legs;
  for (const auto& g : d.wiring.generators) {
    if (const auto* cup = std::get_if<Cup>(&g)) {
      if (!in_range(cup->a) || !in_range(cup->b)) {
        violations.push_back("cup references a wire out of range");
        continue;
      }
      if (cup->a >= cup->b) {
        violations.push_back("cup endpoints must satisfy a < b");
        continue;
      }
      if (!cancels(d.wire_types[cup->a], d.wire_types[cup->b])) {
        violations.push_back("cup (" + std::to_string(cup->a) + "," +
                             std::to_string(cup->b) +
                             ") endpoints are not adjoint-compatible");
      }
      if (!cupped.insert(cup->a).second || !cupped.insert(cup->b).second) {
        violations.push_back("wire consumed by more than one cup");
      }
      cups.push_back(*cup);
    } else if (const auto* sp = std::get_if<CopySpider>(&g)) {
      if (!in_range(sp->src) || !in_range(sp->copy)) {
        violations.push_back("spider references a wire out of range");
        continue;
      }
      if (d.wire_types[sp->src].base != Base::N ||
          d.wire_types[sp->copy].base != Base::N) {
        violations.push_back("spider legs must carry base type n");
      }
      spider_legs.insert(sp->src);
      spider_legs.insert(sp->copy);
    } else {
      const auto& sw = std::get<Swap>(g);
      if (!in_range(sw.a) || !in_range(sw.b) || sw.a == sw.b) {
        violations.push_back("swap references invalid wires");
      }
    }
  }

  for (std::size_t i = 0; i < cups.size(); ++i) {
    for (std::size_t j = i + 1; j < cups.size(); ++j) {
      const Cup& c1 = cups[i].a < cups[j].a ? cups[i] : cups[j];
      const Cup& c2 = cups[i].a < cups[j].a ? cups[j] : cups[i];
      bool disjoint = c1.b < c2.a;
      bool nested = c2.b < c1.b;
      if (!disjoint && !nested) {
        violations.push_back("cups (" + std::to_string(c1.a) + "," +
                             std::to_string(c1.b) + ") and (" +
                             std::to_string(c2.a) + "," +
                             std::to_string(c2.b) + ") cross");
      }
    }
  }

  std::set<int> open_wires;
  for (const auto& ow : d.wiring.open) {
    if (!in_range(ow.wire)) {
      violations.push_back("open wire out of range");
      continue;
    }
    if (d.wire_types[ow.wire] != ow.type) {
      violations.push_back("open wire " + std::to_string(ow.wire) +
                           " listed with the wrong type");
    }
    if (!open_wires.insert(ow.wire).second) {
      violations.push_back("wire listed open twice");
    }
    if (cupped.count(ow.wire)) {
      violations.push_back("wire " + std::to_string(ow.wire) +
                           " is both cupped and open");
    }
  }

  for (int w = 0; w < n; ++w) {
    if (!cupped.count(w) && !spider_legs.count(w) && !open_wires.count(w)) {
      violations.push_back("wire " + std::to_string(w) +
                           " is neither cupped, a spider leg, nor open");
    }
  }
  return violations;
}

std::string diagram_to_json(const Diagram& d) {
  nlohmann::ordered_json j;
  j["words"] = nlohmann::ordered_json::array();
  for (const auto& box : d.words) {
    j["words"].push_back({{"token", box.token},
                          {"type", format_type(box.type)},
                          {"wires", box.output_wires}});
  }
  j["cups"] = nlohmann::ordered_json::array();
  j["spiders"] = nlohmann::ordered_json::array();
  j["swaps"] = nlohmann::ordered_json::array();
  for (const auto& g : d.wiring.generators) {
    if (const auto* cup = std::get_if<Cup>(&g)) {
      j["cups"].push_back({cup->a, cup->b});
    } else if (const auto* sp = std::get_if<CopySpider>(&g)) {
      j["spiders"].push_back({{"src", sp->src}, {"copy", sp->copy}});
    } else {
      const auto& sw = std::get<Swap>(g);
      j["swaps"].push_back({sw.a, sw.b});
    }
  }
  j["open"] = nlohmann::ordered_json::array();
  for (const auto& ow : d.wiring.open) {
    j["open"].push_back(
        {{"wire", ow.wire}, {"type", format_simple(ow.type)}});
  }
  return j.dump(2);
}

}  // namespace discopile
