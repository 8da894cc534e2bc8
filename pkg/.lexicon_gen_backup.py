"""One-off builder for src/mathdefs/data/lexicon.tsv."""

import re

entries = {}  # word -> tag, first writer wins unless overridden later


def put(tag, words, force=False):
    for w in words.split():
        if "?" in w:
            continue
        w = w.replace("_", " ")
        if force or w not in entries:
            entries[w] = tag


# ---------------------------------------------------------------- closed class
put("DT", "the a an this that these those each every some any no all both "
          "either neither another such certain")
put("IN", "of in on at by for with from as into onto over under between "
          "among through during without within along across behind beyond "
          "near since until upon per via about above below after before "
          "against toward towards despite except unlike than whether if "
          "because while although though unless whereas like out off")
put("TO", "to")
put("CC", "and or but nor so yet plus minus")
put("PRP", "it he she they we you i them him her us me itself themselves "
           "himself herself oneself")
put("PRP$", "its his their our your my")
put("MD", "can could may might must shall should will would cannot")
put("EX", "there")
put("WDT", "which whichever")
put("WP", "who whom what whatever")
put("WRB", "where when why how wherever whenever")
put("UH", "yes")

put("CD", "zero one two three four five six seven eight nine ten eleven "
          "twelve thirteen fourteen fifteen sixteen seventeen eighteen "
          "nineteen twenty thirty forty fifty sixty seventy eighty ninety "
          "hundred thousand million billion half")

put("RB", "not also very often usually then here now thus hence therefore "
          "however moreover furthermore indeed perhaps almost always never "
          "sometimes rarely again already still soon together apart away "
          "back well more most less least quite rather too just even only "
          "instead otherwise elsewhere likewise namely approximately "
          "roughly exactly nearly alternatively consequently accordingly "
          "conversely nevertheless nonetheless meanwhile everywhere "
          "anywhere somewhat first second third once twice further")

# Greek letter names stay standalone tokens so they can be matched
# against identifiers extracted from formulas.
put("SYM", "alpha beta gamma delta epsilon varepsilon zeta eta theta "
           "vartheta iota kappa lambda mu nu xi omicron rho sigma varsigma "
           "tau upsilon phi varphi chi psi omega")

# ------------------------------------------------------------------- verbs
IRREGULAR_VERBS = {
    # base: (VBZ, VBD, VBN, VBG)
    "be": None,  # handled explicitly below
    "have": ("has", "had", "had", "having"),
    "do": ("does", "did", "done", "doing"),
    "go": ("goes", "went", "gone", "going"),
    "say": ("says", "said", "said", "saying"),
    "get": ("gets", "got", "gotten", "getting"),
    "make": ("makes", "made", "made", "making"),
    "know": ("knows", "knew", "known", "knowing"),
    "take": ("takes", "took", "taken", "taking"),
    "see": ("sees", "saw", "seen", "seeing"),
    "come": ("comes", "came", "come", "coming"),
    "give": ("gives", "gave", "given", "giving"),
    "find": ("finds", "found", "found", "finding"),
    "tell": ("tells", "told", "told", "telling"),
    "become": ("becomes", "became", "become", "becoming"),
    "show": ("shows", "showed", "shown", "showing"),
    "leave": ("leaves", "left", "left", "leaving"),
    "put": ("puts", "put", "put", "putting"),
    "keep": ("keeps", "kept", "kept", "keeping"),
    "begin": ("begins", "began", "begun", "beginning"),
    "write": ("writes", "wrote", "written", "writing"),
    "read": ("reads", "read", "read", "reading"),
    "hold": ("holds", "held", "held", "holding"),
    "lead": ("leads", "led", "led", "leading"),
    "stand": ("stands", "stood", "stood", "standing"),
    "send": ("sends", "sent", "sent", "sending"),
    "set": ("sets", "set", "set", "setting"),
    "let": ("lets", "let", "let", "letting"),
    "run": ("runs", "ran", "run", "running"),
    "bind": ("binds", "bound", "bound", "binding"),
    "grow": ("grows", "grew", "grown", "growing"),
    "draw": ("draws", "drew", "drawn", "drawing"),
    "rise": ("rises", "rose", "risen", "rising"),
    "fall": ("falls", "fell", "fallen", "falling"),
    "choose": ("chooses", "chose", "chosen", "choosing"),
    "speak": ("speaks", "spoke", "spoken", "speaking"),
    "think": ("thinks", "thought", "thought", "thinking"),
    "bring": ("brings", "brought", "brought", "bringing"),
    "spin": ("spins", "spun", "spun", "spinning"),
    "arise": ("arises", "arose", "arisen", "arising"),
    "undergo": ("undergoes", "underwent", "undergone", "undergoing"),
    "mean": None,  # "mean"/"means" pinned below; domain usage is nominal
}

REGULAR_VERBS = """
denote define represent describe indicate refer express consider assume
suppose obtain derive compute calculate observe determine relate correspond
depend vary satisfy imply follow apply occur exist remain appear introduce
present propose demonstrate prove establish examine study investigate
analyze compare note remark emphasize summarize conclude affect influence
modify transform convert move rotate translate scale shift displace
accelerate oscillate vibrate propagate travel emit absorb reflect refract
scatter collide interact attract repel couple connect link join separate
divide split combine merge add subtract multiply integrate differentiate
converge diverge approach tend restrict constrain extend expand contract
compress stretch bend twist turn align arrange sort classify label mark
identify recognize distinguish select pick place position locate call use
need want ask seem look try help start stop continue include contain
involve require allow enable permit cause create produce generate form
develop improve increase decrease reduce simplify generalize specialize
normalize minimize maximize optimize approximate estimate evaluate solve
substitute rearrange cancel factorize relabel rewrite
replace exchange swap compose invert differ agree disagree correlate
behave act operate function?? happen exert accompany precede succeed
contribute assign attach associate belong pertain specify clarify explain
illustrate exemplify highlight justify verify validate confirm reject
discard ignore omit drop retain preserve conserve maintain sustain support
suggest predict expect anticipate infer deduce conclude reason argue claim
assert postulate hypothesize conjecture model simulate implement realize
achieve attain reach exceed surpass dominate vanish disappear emerge
originate stem result terminate cease halt pause resume repeat iterate
cycle alternate switch toggle measure?? weigh count enumerate list rank
order compare contrast match fit adjust tune calibrate correct refine
equal equate balance offset compensate align center focus concentrate
distribute spread disperse diffuse mix stir heat cool warm freeze melt
boil evaporate condense dissolve react decay radiate ionize polarize
magnetize charge?? discharge conduct insulate resist impede damp amplify
attenuate filter modulate encode decode transmit receive detect sense
record store retrieve access process parse tokenize annotate tag extract
rank?? score weight?? normalize denote
"""

VERB_ONLY_BASES = set()


def vbz(base):
    if re.search(r"(s|x|z|ch|sh|o)$", base):
        return base + "es"
    if re.search(r"[^aeiou]y$", base):
        return base[:-1] + "ies"
    return base + "s"


def vbd(base):
    if base.endswith("e"):
        return base + "d"
    if re.search(r"[^aeiou]y$", base):
        return base[:-1] + "ied"
    return base + "ed"


def vbg(base):
    if base.endswith("ie"):
        return base[:-2] + "ying"
    if base.endswith("e") and not base.endswith("ee"):
        return base[:-1] + "ing"
    return base + "ing"


put("VB", "be")
put("VBZ", "is")
put("VBP", "are am")
put("VBD", "was were")
put("VBN", "been")
put("VBG", "being")

for base, forms in IRREGULAR_VERBS.items():
    if forms is None:
        continue
    z, d, n, g = forms
    put("VB", base)
    put("VBZ", z)
    put("VBD", d)
    put("VBN", n)
    put("VBG", g)

for base in REGULAR_VERBS.split():
    if "?" in base:
        continue
    put("VB", base)
    put("VBZ", vbz(base))
    put("VBD", vbd(base))
    put("VBG", vbg(base))

put("VBZ", "means equals denotes")  # force key 3sg forms even if noun-like

# -------------------------------------------------------------- adjectives
put("JJ", """
small large big high low long short new old same different important
significant common rare simple complex easy hard difficult free bound open
closed positive negative finite infinite discrete continuous linear angular
uniform nonuniform homogeneous inhomogeneous isotropic anisotropic
effective relative absolute total partial net gross initial final stationary
steady transient static dynamic kinetic thermal electric electrical magnetic
electromagnetic electrostatic gravitational mechanical optical acoustic
nuclear atomic molecular orbital quantum classical relativistic ideal real
imaginary rational irrational integer?? prime composite even odd singular
regular irregular smooth rough dense sparse thick thin deep shallow wide
narrow broad flat curved straight parallel perpendicular orthogonal normal
tangent?? oblique convex concave symmetric antisymmetric asymmetric
invariant covariant contravariant conserved dimensionless scalar?? unit??
inverse reciprocal proportional inversely constant?? arbitrary general
special particular specific standard conventional typical usual unusual
ordinary extraordinary fundamental basic elementary primary secondary
tertiary principal main central local global internal external inner outer
upper lower left right forward backward apparent true false exact
approximate average maximal minimal optimal extremal critical marginal
stable unstable neutral equivalent equal?? unequal distinct unique multiple
single double triple dual mutual reciprocal instantaneous gradual rapid
slow fast quick weak strong dominant negligible appreciable considerable
substantial moderate severe mild pure mixed impure dry wet hot cold warm
cool bright dark light?? heavy dense massive massless rigid elastic plastic
viscous fluid?? solid?? compressible incompressible transverse longitudinal
radial axial lateral vertical horizontal diagonal good bad better best
worse worst likely unlikely possible impossible necessary sufficient
available suitable appropriate convenient useful useless empty full
nonempty nonzero zeroth first-order second-order higher-order lowest
highest overall
""")

# ------------------------------------------------------------------- nouns
IRREGULAR_PLURALS = {
    "radius": "radii", "focus": "foci", "locus": "loci",
    "nucleus": "nuclei", "vertex": "vertices", "matrix": "matrices",
    "index": "indices", "axis": "axes", "analysis": "analyses",
    "basis": "bases", "hypothesis": "hypotheses", "thesis": "theses",
    "phenomenon": "phenomena", "criterion": "criteria",
    "medium": "media", "quantum": "quanta", "spectrum": "spectra",
    "maximum": "maxima", "minimum": "minima", "extremum": "extrema",
    "formula": "formulae", "continuum": "continua",
    "equilibrium": "equilibria", "datum": "data", "stratum": "strata",
    "child": "children", "man": "men", "woman": "women",
    "foot": "feet", "series": "series", "species": "species",
    "apparatus": "apparatus", "momentum": "momenta",
}

NOUNS = """
energy mass velocity speed force time number temperature angle group radius
field function constant equation value point line distance area volume
charge current frequency wavelength momentum pressure density potential
particle wave system theory body light matrix vector set space probability
variable coefficient factor term sum product integral derivative limit
sequence power work heat sound matter state rate flow flux motion position
displacement acceleration gravity gravitation spring pendulum oscillator
oscillation amplitude period phase node wavefront medium ray beam lens
mirror prism photon electron proton neutron atom molecule ion nucleus
isotope element compound mixture solution solvent solute gas liquid solid
plasma crystal lattice bond orbit orbital shell spin magnitude direction
dimension unit measure measurement quantity property attribute feature
characteristic parameter argument input output result outcome effect
consequence interaction relation relationship correspondence mapping map
transformation operator operation operand expression formula symbol
notation definition meaning interpretation description identifier letter
word sentence paragraph article text corpus document page book paper
author reader writer scientist physicist mathematician engineer student
teacher professor researcher observer experiment observation hypothesis
prediction conclusion assumption axiom postulate theorem lemma corollary
proof argument?? statement proposition condition constraint requirement
criterion rule law principle model framework method technique approach
procedure algorithm process step stage phase?? level degree order rank
class category type kind sort form shape structure pattern arrangement
configuration geometry topology size length width height depth thickness
breadth scale proportion ratio fraction percentage part portion piece
segment section component element?? ingredient item object entity thing
instance example case sample specimen population ensemble collection
aggregate cluster bundle packet pulse signal noise datum data information
knowledge evidence fact detail aspect feature?? viewpoint perspective
context background environment surroundings boundary edge surface face
side corner vertex center centre middle interior exterior region zone
domain range interval neighborhood vicinity locus path trajectory curve
arc chord tangent secant circle ellipse parabola hyperbola polygon
triangle square rectangle cube sphere cylinder cone torus plane axis
coordinate origin pole equator meridian latitude longitude altitude
azimuth inclination declination node?? antinode crest trough cycle
revolution rotation translation reflection refraction diffraction
interference superposition resonance damping friction drag lift thrust
torque moment inertia stress strain tension compression shear elasticity
viscosity turbulence vortex eddy stream jet current?? tide wavelet
harmonic overtone octave pitch tone timbre loudness intensity brightness
luminosity illumination radiance irradiance emission absorption spectrum
band gap transition excitation ionization polarization magnetization
conductance conductivity resistance resistivity impedance capacitance
inductance voltage potential?? circuit resistor capacitor inductor diode
transistor semiconductor conductor insulator dielectric electrode anode
cathode terminal battery generator motor engine turbine pump valve piston
cylinder?? chamber vessel container tank reservoir pipe tube duct channel
conduit wire cable rod bar beam?? plate shell?? membrane film layer
coating substrate sample?? probe sensor detector counter scaler amplifier
filter?? oscillograph oscilloscope spectrometer interferometer telescope
microscope camera lens?? aperture shutter pixel image?? picture photograph
figure diagram chart graph plot histogram table row column cell entry grid
mesh network tree node?? leaf root branch?? link?? edge?? weight degree??
cluster?? clique cut flow?? matching path?? walk tour distance?? metric
norm inner product?? outer product?? determinant trace eigenvalue
eigenvector eigenfunction eigenstate spectrum?? kernel image?? cokernel
rank?? nullity span basis dimension?? subspace quotient coset ideal ring
group?? subgroup monoid semigroup groupoid algebra field?? module lattice??
category?? functor morphism homomorphism isomorphism endomorphism
automorphism embedding projection injection surjection bijection inverse??
identity permutation combination partition composition decomposition
factorization expansion series?? convergence divergence continuity
differentiability integrability measure?? integration differentiation
summation iteration recursion induction deduction inference logic
proposition?? predicate quantifier variable?? constant?? literal clause
formula?? sentence?? language grammar syntax semantics alphabet string
symbol?? token word?? prefix suffix substring subsequence automaton
machine computer processor memory register cache disk tape program code
instruction statement?? loop?? branch?? jump call?? return?? stack queue
heap array list?? vector?? tuple record?? structure?? pointer reference
address index?? key?? hash bucket slot entry?? item?? element??
probability?? likelihood odds chance risk expectation variance deviation
dispersion skewness kurtosis moment?? median mode?? quantile percentile
correlation covariance regression estimator estimate bias error residual
outlier sample??? population?? census survey poll trial experiment??
event?? outcome?? space?? distribution histogram?? density?? frequency??
count?? proportion?? rate?? score?? metric?? benchmark baseline threshold
cutoff criterion?? standard?? reference?? calibration validation
verification test?? check inspection review audit assessment evaluation
analysis synthesis design architecture implementation deployment operation
maintenance repair replacement upgrade improvement optimization refinement
simplification generalization specialization abstraction instantiation
realization interpretation?? translation?? compilation execution runtime
performance efficiency effectiveness throughput latency bandwidth capacity
load demand supply consumption production generation?? storage transfer
transmission reception propagation conduction convection radiation
diffusion osmosis permeability porosity humidity moisture vapor steam
cloud rain snow ice frost dew fog mist wind storm thunder lightning
climate weather season spring?? summer autumn winter day night morning
evening noon midnight hour minute?? second?? millisecond microsecond
nanosecond year month week decade century millennium epoch era age??
history origin?? beginning end?? middle?? conclusion?? summary abstract
introduction preface appendix glossary bibliography reference?? citation
footnote annotation comment remark note?? label?? caption title heading
subtitle chapter verse stanza clause?? phrase noun verb adjective adverb
pronoun preposition conjunction interjection determiner article??
subject?? object?? predicate?? complement modifier head dependent
constituent tree?? parse tagger tokenizer lexicon vocabulary dictionary
thesaurus encyclopedia wiki hyperlink website webpage page?? site server
client browser protocol packet?? message request response header body??
payload footer checksum signature certificate key??? cipher plaintext
ciphertext encryption decryption authentication authorization session
transaction database schema?? relation?? attribute?? tuple?? query
человек
""".replace("???", "").replace("человек", "")

for noun in NOUNS.split():
    if "?" in noun or not noun.isascii():
        continue
    put("NN", noun)
    if noun in IRREGULAR_PLURALS:
        put("NNS", IRREGULAR_PLURALS[noun])
    elif re.search(r"(s|x|z|ch|sh)$", noun):
        put("NNS", noun + "es")
    elif re.search(r"[^aeiou]y$", noun):
        put("NNS", noun[:-1] + "ies")
    else:
        put("NNS", noun + "s")

for sing, plur in IRREGULAR_PLURALS.items():
    put("NN", sing)
    put("NNS", plur)

put("NN", "mean")  # "the mean" in statistics; verb use covered by "means"
put("NN", "rank order list score count sum", force=True)

# -------------------------------------------------------------- proper nouns
put("NNP", """
Hamiltonian Lagrangian Laplacian Jacobian Hessian Gaussian Newtonian
Euclidean Cartesian Boolean Abelian Hermitian Riemannian Lorentzian
Newton Einstein Euler Gauss Fourier Laplace Lagrange Hamilton Maxwell
Boltzmann Planck Schrodinger Heisenberg Dirac Fermi Bose Pauli Coulomb
Faraday Ampere Ohm Volta Watt Joule Kelvin Celsius Fahrenheit Hertz
Pascal Bernoulli Cauchy Riemann Hilbert Banach Fubini Lebesgue Borel
Markov Poisson Wiener Brown Galileo Kepler Copernicus Archimedes
Pythagoras Fibonacci Descartes Fermat Leibniz Taylor Maclaurin
Wikipedia Internet Earth Moon Sun
""")

lines = ["# word<TAB>tag lexicon for the built-in part-of-speech tagger.",
         "# Lookup order: exact form, then lowercased form.",
         "# After the #SUFFIX marker: ordered suffix rules (first match wins)."]
for word in sorted(entries):
    lines.append(f"{word}\t{entries[word]}")

lines.append("#SUFFIX")
suffix_rules = [
    ("tion", "NN"), ("sion", "NN"), ("ness", "NN"), ("ment", "NN"),
    ("ance", "NN"), ("ence", "NN"), ("ship", "NN"), ("ism", "NN"),
    ("ist", "NN"), ("ity", "NN"), ("ics", "NN"), ("ous", "JJ"),
    ("ive", "JJ"), ("ical", "JJ"), ("ic", "JJ"), ("able", "JJ"),
    ("ible", "JJ"), ("less", "JJ"), ("ful", "JJ"), ("ish", "JJ"),
    ("ary", "JJ"), ("ly", "RB"), ("ing", "VBG"), ("ied", "VBD"),
    ("ed", "VBD"), ("ies", "NNS"), ("ss", "NN"), ("us", "NN"),
    ("is", "NN"), ("xes", "NNS"), ("ches", "NNS"), ("shes", "NNS"),
    ("s", "NNS"),
]
for suffix, tag in suffix_rules:
    lines.append(f"{suffix}\t{tag}")

with open("/root/pkg/src/mathdefs/data/lexicon.tsv", "w", encoding="utf-8") as fh:
    fh.write("\n".join(lines) + "\n")

print(f"{len(entries)} word entries, {len(suffix_rules)} suffix rules")
