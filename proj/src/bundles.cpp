#include "qflag/bundles.hpp"

#include <cstdlib>
#include <iterator>

namespace qflag {

HopfMapId HopfMapId::make(HopfTag tag, int n) {
  AlgebraSpec src{AlgebraKind::SpecialUnitaryGroup, n, n};
  switch (tag) {
    case HopfTag::Alpha: return {tag, src, {AlgebraKind::UnitaryGroup, n - 1, n}};
    case HopfTag::Beta: return {tag, src, {AlgebraKind::SpecialUnitaryGroup, n - 1, n}};
    case HopfTag::Gamma: return {tag, src, {AlgebraKind::UnitaryGroup, 1, n}};
  }
  throw InternalError("bad map tag");
}

std::string HopfMapId::name() const {
  switch (tag) {
    case HopfTag::Alpha: return "alpha";
    case HopfTag::Beta: return "beta";
    case HopfTag::Gamma: return "gamma";
  }
  return {};
}

HopfTag parse_hopf_tag(const std::string& s) {
  if (s == "alpha") return HopfTag::Alpha;
  if (s == "beta") return HopfTag::Beta;
  if (s == "gamma") return HopfTag::Gamma;
  throw PreconditionError("unknown map '" + s + "' (expected alpha, beta or gamma)");
}

namespace {

void add_outer(TensorPoly& t, const NCPoly& a, const NCPoly& b, const QScalar& c = QScalar(1L)) {
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) t.add(wa, wb, c * ca * cb);
}

std::vector<NCPoly> blank_images(const Algebra& source, const Algebra& target) {
  return std::vector<NCPoly>(static_cast<std::size_t>(source.size() * source.size() + 1), target.zero());
}

AlgebraMap make_alpha(const Session& s) {
  const Algebra& t = s.u_fiber();
  auto im = blank_images(s.su(), t);
  im[static_cast<std::size_t>(s.su().code(1, 1))] = t.detinv();
  for (int i = 2; i <= s.n(); ++i)
    for (int j = 2; j <= s.n(); ++j) im[static_cast<std::size_t>(s.su().code(i, j))] = t.gen(i - 1, j - 1);
  return AlgebraMap(s.su(), t, std::move(im));
}

AlgebraMap make_beta(const Session& s) {
  const Algebra& t = s.su_fiber();
  auto im = blank_images(s.su(), t);
  im[static_cast<std::size_t>(s.su().code(1, 1))] = t.one();
  for (int i = 2; i <= s.n(); ++i)
    for (int j = 2; j <= s.n(); ++j)
      im[static_cast<std::size_t>(s.su().code(i, j))] = t.normal_form(t.gen(i - 1, j - 1));
  return AlgebraMap(s.su(), t, std::move(im));
}

NCPoly gamma_diagonal(const Session& s, int i) {
  if (i == 1) return s.u1().detinv();
  if (i == s.n()) return s.u1().gen(1, 1);
  return s.u1().one();
}

AlgebraMap make_gamma(const Session& s) {
  auto im = blank_images(s.su(), s.u1());
  for (int i = 1; i <= s.n(); ++i) im[static_cast<std::size_t>(s.su().code(i, i))] = gamma_diagonal(s, i);
  return AlgebraMap(s.su(), s.u1(), std::move(im));
}

AlgebraMap make_delta(const Session& s) {
  const Algebra& src = s.u_fiber();
  const Algebra& t = s.su_fiber();
  auto im = blank_images(src, t);
  for (int i = 1; i < s.n(); ++i)
    for (int j = 1; j < s.n(); ++j) im[static_cast<std::size_t>(src.code(i, j))] = t.normal_form(t.gen(i, j));
  im[static_cast<std::size_t>(src.detinv_code())] = t.one();
  return AlgebraMap(src, t, std::move(im));
}

AlgebraMap make_zeta(const Session& s) {
  const Algebra& src = s.u_fiber();
  auto im = blank_images(src, s.u1());
  for (int i = 1; i < s.n(); ++i) im[static_cast<std::size_t>(src.code(i, i))] = gamma_diagonal(s, i + 1);
  im[static_cast<std::size_t>(src.detinv_code())] = s.u1().detinv();
  return AlgebraMap(src, s.u1(), std::move(im));
}

}  // namespace

AlgebraMap::AlgebraMap(const Algebra& source, const Algebra& target, std::vector<NCPoly> images)
    : source_(&source), target_(&target), images_(std::move(images)) {}

const NCPoly& AlgebraMap::image(const Word& w) const {
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  NCPoly out = w.empty() ? target_->one()
                         : target_->multiply(image(w.substr(0, w.size() - 1)),
                                             images_.at(static_cast<unsigned char>(w.back())));
  return memo_.emplace(w, std::move(out)).first->second;
}

NCPoly AlgebraMap::operator()(const NCPoly& f) const {
  if (!(f.spec() == source_->spec()))
    throw ContextMismatch("map expects an element of " + source_->spec().name() + ", got " + f.spec().name());
  NCPoly out = target_->zero();
  for (const auto& [w, c] : f.terms()) out += c * image(w);
  return out;
}

Bundles::Bundles(const Session& s)
    : s_(s), alpha_(make_alpha(s)), beta_(make_beta(s)), gamma_(make_gamma(s)), delta_(make_delta(s)),
      zeta_(make_zeta(s)) {}

const AlgebraMap& Bundles::map(HopfTag tag) const {
  switch (tag) {
    case HopfTag::Alpha: return alpha_;
    case HopfTag::Beta: return beta_;
    case HopfTag::Gamma: return gamma_;
  }
  throw InternalError("bad map tag");
}

const Algebra& Bundles::target(HopfTag tag) const { return map(tag).target(); }

NCPoly Bundles::hopf_map(HopfTag tag, const NCPoly& f) const { return map(tag)(s_.su().normal_form(f)); }

NCPoly Bundles::section(HopfTag tag, const NCPoly& h) const {
  const Algebra& su = s_.su();
  const Algebra& t = target(tag);
  if (!(h.spec() == t.spec())) throw ContextMismatch("section expects an element of " + t.spec().name());
  NCPoly out = su.zero();
  const NCPoly nh = t.normal_form(h);
  for (const auto& [w, c] : nh.terms()) {
    NCPoly m = su.one();
    for (char x : w) {
      Gen g = t.decode(x);
      NCPoly pre = su.zero();
      switch (tag) {
        case HopfTag::Alpha:
          pre = g.detinv ? su.gen(1, 1) : su.gen(g.row + 1, g.col + 1);
          break;
        case HopfTag::Beta:
          pre = su.gen(g.row + 1, g.col + 1);
          break;
        case HopfTag::Gamma:
          pre = g.detinv ? s_.z(1) : s_.zs(1);
          break;
      }
      m = su.multiply(m, pre);
    }
    out += c * m;
  }
  return out;
}

TensorPoly Bundles::coaction(HopfTag tag, const NCPoly& f) const {
  const AlgebraMap& m = map(tag);
  TensorPoly out(s_.su().spec(), m.target().spec());
  for (const auto& [right, left] : s_.su().coproduct(f).by_right()) add_outer(out, left, m.image(right));
  return out;
}

bool Bundles::is_coinvariant(HopfTag tag, const NCPoly& f) const {
  return coaction(tag, f) == TensorPoly::simple(s_.su().normal_form(f), target(tag).one());
}

int Bundles::line_bundle_degree(const NCPoly& f) const {
  NCPoly nf = s_.su().normal_form(f);
  if (nf.is_zero()) throw NotHomogeneous("zero has no degree");
  auto legs = coaction(HopfTag::Gamma, nf).by_right();
  if (legs.size() != 1) throw NotHomogeneous("coaction has several fiber legs");
  const auto& [w, left] = *legs.begin();
  const Algebra& u1 = s_.u1();
  int p = 0;
  for (char x : w) p += u1.decode(x).detinv ? -1 : 1;
  if (std::abs(p) != static_cast<int>(w.size()) || !(left == nf))
    throw NotHomogeneous("element is not homogeneous for the U_1 coaction");
  return p;
}

TensorPoly Bundles::galois_ver(const NCPoly& f, const NCPoly& g, HopfTag tag) const {
  const AlgebraMap& m = map(tag);
  TensorPoly out(s_.su().spec(), m.target().spec());
  for (const auto& [right, left] : s_.su().coproduct(g).by_right())
    add_outer(out, s_.su().multiply(f, left), m.image(right));
  return out;
}

TensorPoly Bundles::galois_ver(const TensorPoly& x, HopfTag tag) const {
  TensorPoly out(s_.su().spec(), target(tag).spec());
  for (const auto& [right, left] : x.by_right()) out += galois_ver(left, s_.su().word(right), tag);
  return out;
}

TensorPoly Bundles::v_map(const NCPoly& f, const NCPoly& p) const {
  const Algebra& su = s_.su();
  TensorPoly out(su.spec(), su.spec());
  for (const auto& [left, right] : su.coproduct(p).by_left())
    add_outer(out, su.multiply(f, su.antipode(su.word(left))), right);
  return out;
}

TensorPoly Bundles::galois_ver_inv(const NCPoly& f, const NCPoly& h, HopfTag tag) const {
  return v_map(f, section(tag, h));
}

TensorPoly Bundles::galois_ver_inv(const TensorPoly& x, HopfTag tag) const {
  const Algebra& t = target(tag);
  TensorPoly out(s_.su().spec(), s_.su().spec());
  for (const auto& [right, left] : x.by_right()) out += galois_ver_inv(left, t.word(right), tag);
  return out;
}

Omega1 Bundles::theta(const NCPoly& x) const {
  const Algebra& su = s_.su();
  const Calculus& calc = s_.calculus();
  if (!su.counit(x).is_zero()) throw PreconditionError("theta requires ε(x) = 0");
  if (!is_coinvariant(HopfTag::Beta, x)) throw PreconditionError("theta requires an element of the sphere");
  Omega1 out = calc.zero();
  for (const auto& [left, right] : su.coproduct(x).by_left())
    out += calc.left_mul(su.antipode(su.word(left)), calc.ext_d(right));
  return out;
}

Omega1 Bundles::dolbeault(const NCPoly& f, DolbeaultPart part) const {
  const Calculus& calc = s_.calculus();
  if (!is_coinvariant(HopfTag::Alpha, f)) throw PreconditionError("∂ and ∂̄ are defined on projective space only");
  Omega1 w = calc.ext_d(f);
  if (!w.coeff(calc.index().e0()).is_zero()) throw CoinvarianceViolation("d f has an e0 component");
  return calc.project(w, part == DolbeaultPart::Hol ? FormBlock::Plus : FormBlock::Minus);
}

Omega1 Bundles::connection_project(const Omega1& w) const { return s_.calculus().project(w, FormBlock::Zero); }

Omega1 Bundles::covariant_derivative(const NCPoly& f) const {
  line_bundle_degree(f);
  Omega1 w = s_.calculus().ext_d(f);
  return w - connection_project(w);
}

std::map<Word, OneFormCoords, WordLess> Bundles::framing_coaction(HopfTag tag, const NCPoly& v) const {
  const Algebra& su = s_.su();
  const Algebra& t = target(tag);
  const Calculus& calc = s_.calculus();
  std::map<Word, OneFormCoords, WordLess> out;
  for (const auto& [left, right] : su.coproduct(v).by_left()) {
    OneFormCoords c = calc.coset(right - su.scalar(su.counit(right)));
    NCPoly leg = t.antipode(map(tag).image(left));
    for (const auto& [w, k] : leg.terms()) {
      auto& slot = out.try_emplace(w, OneFormCoords(c.size())).first->second;
      for (std::size_t b = 0; b < c.size(); ++b) slot[b] += k * c[b];
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    bool zero = true;
    for (const auto& x : it->second) zero = zero && x.is_zero();
    it = zero ? out.erase(it) : std::next(it);
  }
  return out;
}

QScalar Bundles::fiber_class(const NCPoly& y) const {
  const Algebra& su = s_.su();
  NCPoly x = section(HopfTag::Alpha, y);
  x -= su.scalar(su.counit(x));
  return s_.calculus().coset(x)[static_cast<std::size_t>(s_.calculus().index().e0())];
}

std::map<Word, NCPoly, WordLess> Bundles::adr_alpha(const NCPoly& x) const {
  std::map<Word, NCPoly, WordLess> out;
  for (const auto& [right, left] : s_.killing().ad_r(x).by_right())
    for (const auto& [w, c] : alpha_.image(right).terms())
      out.try_emplace(w, s_.su().zero()).first->second += c * left;
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::vector<NCPoly> Bundles::fiber_ideal_span(HopfTag tag, int degree_bound) const {
  std::vector<NCPoly> out;
  for (const auto& p : s_.calculus().ideal_window(degree_bound)) {
    NCPoly img = hopf_map(tag, p);
    if (!img.is_zero()) out.push_back(std::move(img));
  }
  return out;
}

SubalgebraElement::SubalgebraElement(const Bundles& b, NCPoly f, Space space, int degree)
    : f_(std::move(f)), space_(space), degree_(degree) {
  switch (space) {
    case Space::Sphere:
      if (!b.is_coinvariant(HopfTag::Beta, f_)) throw PreconditionError("element is not in the quantum sphere");
      break;
    case Space::ProjectiveSpace:
      if (!b.is_coinvariant(HopfTag::Alpha, f_)) throw PreconditionError("element is not in projective space");
      break;
    case Space::LineBundle:
      if (b.line_bundle_degree(f_) != degree) throw PreconditionError("element has a different degree");
      break;
  }
}

}  // namespace qflag
