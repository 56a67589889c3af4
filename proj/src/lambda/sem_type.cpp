#include "contsem/sem_type.hpp"

#include <stdexcept>

namespace contsem {

SemType SemType::e() {
  static const SemType type(std::make_shared<Node>(Node{Kind::E, nullptr, nullptr}));
  return type;
}

SemType SemType::t() {
  static const SemType type(std::make_shared<Node>(Node{Kind::T, nullptr, nullptr}));
  return type;
}

SemType SemType::g() {
  static const SemType type(std::make_shared<Node>(Node{Kind::G, nullptr, nullptr}));
  return type;
}

SemType SemType::arrow(SemType domain, SemType codomain) {
  return SemType(std::make_shared<Node>(Node{Kind::Arrow,
                                             std::make_shared<const SemType>(std::move(domain)),
                                             std::make_shared<const SemType>(std::move(codomain))}));
}

SemType SemType::chain(std::initializer_list<SemType> parts) {
  if (parts.size() == 0) throw std::invalid_argument("SemType::chain needs at least one type");
  auto it = parts.end();
  SemType result = *--it;
  while (it != parts.begin()) {
    --it;
    result = arrow(*it, result);
  }
  return result;
}

const SemType& SemType::domain() const {
  if (!is_arrow()) throw std::logic_error("domain() of a base type");
  return *node_->domain;
}

const SemType& SemType::codomain() const {
  if (!is_arrow()) throw std::logic_error("codomain() of a base type");
  return *node_->codomain;
}

std::string SemType::str() const {
  switch (kind()) {
    case Kind::E:
      return "e";
    case Kind::T:
      return "t";
    case Kind::G:
      return "g";
    case Kind::Arrow: {
      std::string left = domain().str();
      if (domain().is_arrow()) left = "(" + left + ")";
      return left + ">" + codomain().str();
    }
  }
  return "?";
}

bool operator==(const SemType& a, const SemType& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() != SemType::Kind::Arrow) return true;
  return a.domain() == b.domain() && a.codomain() == b.codomain();
}

SemType kappa_b() {
  const auto t = SemType::t();
  return SemType::chain({t, t, t});
}

SemType kappa_c() {
  const auto g = SemType::g();
  return SemType::chain({g, g, g});
}

SemType sentence_a() {
  const auto g = SemType::g();
  return SemType::chain({g, SemType::arrow(g, SemType::t()), SemType::t()});
}

namespace {

SemType dual_environment_sentence(const SemType& kappa) {
  const auto g = SemType::g();
  const auto t = SemType::t();
  SemType continuation = SemType::chain({kappa, g, g, t});
  return SemType::chain({kappa, g, g, continuation, t});
}

}  // namespace

SemType sentence_b() { return dual_environment_sentence(kappa_b()); }
SemType sentence_c() { return dual_environment_sentence(kappa_c()); }

}  // namespace contsem
