#!/usr/bin/env python3
"""Generate data/lexicon_open.tsv (word<TAB>POS[<TAB>lemma]).

Open-class entries are produced from curated base lists plus mechanical
inflection.  Order matters: the loader keeps the first entry per word, so
overrides come first, then nouns, then adjectives, then verbs.
"""

from pathlib import Path

# Surface forms whose majority tag must beat the mechanical lists below.
OVERRIDES = [
    ("search", "NOUN"), ("searches", "NOUN"), ("moves", "NOUN"),
    ("measure", "NOUN"), ("measures", "NOUN"), ("output", "NOUN"),
    ("outputs", "NOUN"), ("state", "NOUN"), ("states", "NOUN"),
    ("result", "NOUN"), ("results", "NOUN"), ("process", "NOUN"),
    ("processes", "NOUN"), ("study", "NOUN"), ("studies", "NOUN"),
    ("work", "NOUN"), ("works", "NOUN"), ("data", "NOUN", "data"),
]

NOUNS = """
agent sensor actuator action performance environment percept goal problem
solution method system graph triple entity relation predicate subject object
node edge chapter textbook glossary term word sentence text function
algorithm model computer science machine intelligence sequence move concept
knowledge information future time way year day world life hand part place
case question number group fact idea point example table figure value order
level power line end side kind type name area effect use cause rule step
game player board piece position strategy theory property category quality
quantity structure pattern feature input task test tool unit variable vector
set list item element component module layer network tree path route map
plan cost weight score rate ratio probability distribution sample population
measurement definition description section paragraph page book paper author
reader student teacher researcher scientist engineer user person family
friend city country language letter symbol sign phrase clause noun verb
adjective adverb pronoun preposition grammar syntax semantics meaning sense
context domain field topic notion aspect detail summary overview
introduction conclusion discussion experiment observation evidence argument
reason purpose intention decision choice option alternative approach
technique procedure operation stage phase cycle loop iteration recursion
condition constraint requirement specification design implementation version
release update change difference similarity comparison relationship
connection link reference source target origin destination direction
distance length width height depth size shape color image picture view
perspective angle degree amount total sum average mean median range limit
boundary border corner center middle top bottom front back beginning
database query answer label class instance attribute chunk token lemma stem
corpus document index matrix analysis hypothesis criterion phenomenon
stopword pipeline flow diagram visualization canvas parameter software
hardware robot game heuristic utility reward policy belief logic inference
proposition statement axiom theorem proof lemma calculus course lecture
exercise training error mistake noise signal message channel code program
"""

IRREGULAR_NOUNS = [
    ("man", "men"), ("woman", "women"), ("child", "children"),
    ("person", "people"), ("foot", "feet"), ("tooth", "teeth"),
    ("mouse", "mice"), ("goose", "geese"), ("ox", "oxen"),
    ("index", "indices"), ("matrix", "matrices"), ("vertex", "vertices"),
    ("analysis", "analyses"), ("hypothesis", "hypotheses"),
    ("criterion", "criteria"), ("phenomenon", "phenomena"),
]

ADJECTIVES = """
rational multiple intelligent artificial simple complex different similar
important main general specific common rare new old good bad big small
large little high low long short early late right wrong true false real
possible impossible necessary sufficient available useful useless valid
invalid correct incorrect complete incomplete single double several various
certain uncertain clear unclear easy difficult hard soft fast slow quick
strong weak full empty open closed free busy ready final initial previous
next current recent equal equivalent relevant irrelevant optimal maximum
minimum partial internal external individual particular special standard
normal typical unique original basic advanced primary secondary successful
unknown numerous efficient inefficient effective active passive positive
negative direct indirect explicit implicit abstract concrete formal informal
theoretical practical physical logical mathematical statistical
computational empirical automatic manual dynamic static linear discrete
continuous finite infinite local global deep shallow broad narrow rich poor
raw safe stable unstable robust fragile flexible rigid visible invisible
suitable reliable capable responsible independent dependent aware whole
domain-specific second third last other same few many much top bottom
"""

# base, 3sg, past, participle, gerund; regular verbs derive mechanically
IRREGULAR_VERBS = [
    ("give", "gives", "gave", "given", "giving"),
    ("take", "takes", "took", "taken", "taking"),
    ("make", "makes", "made", "made", "making"),
    ("get", "gets", "got", "gotten", "getting"),
    ("go", "goes", "went", "gone", "going"),
    ("come", "comes", "came", "come", "coming"),
    ("see", "sees", "saw", "seen", "seeing"),
    ("know", "knows", "knew", "known", "knowing"),
    ("think", "thinks", "thought", "thought", "thinking"),
    ("say", "says", "said", "said", "saying"),
    ("tell", "tells", "told", "told", "telling"),
    ("find", "finds", "found", "found", "finding"),
    ("show", "shows", "showed", "shown", "showing"),
    ("mean", "means", "meant", "meant", "meaning"),
    ("keep", "keeps", "kept", "kept", "keeping"),
    ("begin", "begins", "began", "begun", "beginning"),
    ("run", "runs", "ran", "run", "running"),
    ("speak", "speaks", "spoke", "spoken", "speaking"),
    ("read", "reads", "read", "read", "reading"),
    ("write", "writes", "wrote", "written", "writing"),
    ("teach", "teaches", "taught", "taught", "teaching"),
    ("lead", "leads", "led", "led", "leading"),
    ("build", "builds", "built", "built", "building"),
    ("understand", "understands", "understood", "understood", "understanding"),
    ("become", "becomes", "became", "become", "becoming"),
    ("choose", "chooses", "chose", "chosen", "choosing"),
    ("draw", "draws", "drew", "drawn", "drawing"),
    ("fall", "falls", "fell", "fallen", "falling"),
    ("feed", "feeds", "fed", "fed", "feeding"),
    ("grow", "grows", "grew", "grown", "growing"),
    ("hold", "holds", "held", "held", "holding"),
    ("send", "sends", "sent", "sent", "sending"),
    ("stand", "stands", "stood", "stood", "standing"),
    ("win", "wins", "won", "won", "winning"),
    ("bring", "brings", "brought", "brought", "bringing"),
    ("buy", "buys", "bought", "bought", "buying"),
    ("catch", "catches", "caught", "caught", "catching"),
    ("feel", "feels", "felt", "felt", "feeling"),
    ("let", "lets", "let", "let", "letting"),
    ("put", "puts", "put", "put", "putting"),
    ("prove", "proves", "proved", "proven", "proving"),
    ("occur", "occurs", "occurred", "occurred", "occurring"),
    ("refer", "refers", "referred", "referred", "referring"),
    ("prefer", "prefers", "preferred", "preferred", "preferring"),
    ("plan", "plans", "planned", "planned", "planning"),
    ("control", "controls", "controlled", "controlled", "controlling"),
    ("tag", "tags", "tagged", "tagged", "tagging"),
    ("transfer", "transfers", "transferred", "transferred", "transferring"),
    ("stop", "stops", "stopped", "stopped", "stopping"),
    ("carry", "carries", "carried", "carried", "carrying"),
    ("try", "tries", "tried", "tried", "trying"),
    ("apply", "applies", "applied", "applied", "applying"),
    ("identify", "identifies", "identified", "identified", "identifying"),
    ("classify", "classifies", "classified", "classified", "classifying"),
    ("simplify", "simplifies", "simplified", "simplified", "simplifying"),
    ("specify", "specifies", "specified", "specified", "specifying"),
    ("satisfy", "satisfies", "satisfied", "satisfied", "satisfying"),
    ("imply", "implies", "implied", "implied", "implying"),
    ("vary", "varies", "varied", "varied", "varying"),
]

REGULAR_VERBS = """
select expect maximize minimize optimize follow describe define represent
consider include exclude involve require provide contain perform operate
generate create extract convert transform produce reduce increase decrease
improve develop construct derive determine establish evaluate examine
explain explore express extend form formulate implement indicate introduce
investigate link list locate maintain manage map mark match modify note
observe obtain offer predict prepare present propose receive reflect relate
remove replace report return reveal separate serve solve store suggest
support train treat update verify visualize accept achieve act add affect
allow appear assign assume attach avoid base believe belong capture cause
check collect combine compare compute conclude connect consist continue
contribute correspond count cover decide demonstrate denote depend detect
differ discover discuss display divide enable encode ensure enter exist
fail fill filter fit fix focus gain handle happen hope imagine move point
print reach realize remain remember repeat resolve respond rest save seem
share sort sound split succeed switch touch trace track translate travel
view visit wait watch wonder yield chunk parse tokenize lemmatize stem want
need use call help ask answer start end turn play walk talk learn study
test search state work process measure output result clean normalize render
look listen live love like open close push pull press release load emit
perceive interact reason infer deduce plant act achieve score retrieve
"""


def regular_noun_plural(w):
    if w.endswith("y") and len(w) > 2 and w[-2] not in "aeiou":
        return w[:-1] + "ies"
    if w.endswith(("s", "x", "z", "ch", "sh")):
        return w + "es"
    return w + "s"


def regular_verb_forms(w):
    if w.endswith("e"):
        return (regular_noun_plural(w), w + "d", w[:-1] + "ing")
    if w.endswith("y") and len(w) > 2 and w[-2] not in "aeiou":
        return (w[:-1] + "ies", w[:-1] + "ied", w + "ing")
    return (regular_noun_plural(w), w + "ed", w + "ing")


def main():
    rows = []
    seen = set()

    def add(word, pos, lemma=None):
        if word in seen:
            return
        seen.add(word)
        rows.append((word, pos, lemma))

    for entry in OVERRIDES:
        add(*entry)

    uncountable = {"knowledge", "information", "intelligence", "semantics",
                   "software", "hardware", "logic", "calculus", "data",
                   "future", "syntax", "training", "noise"}
    for w in NOUNS.split():
        add(w, "NOUN")
        if w not in uncountable:
            add(regular_noun_plural(w), "NOUN")
    for singular, plural in IRREGULAR_NOUNS:
        add(singular, "NOUN", singular)
        add(plural, "NOUN", singular)

    for w in ADJECTIVES.split():
        add(w, "ADJ")

    for base, s3, past, part, ger in IRREGULAR_VERBS:
        for form in (base, s3, past, part, ger):
            add(form, "VERB", base)
    for w in REGULAR_VERBS.split():
        s3, past, ger = regular_verb_forms(w)
        for form in (w, s3, past, ger):
            add(form, "VERB", w)

    out = Path(__file__).resolve().parents[2] / "data" / "lexicon_open.tsv"
    with open(out, "w", encoding="utf-8") as f:
        f.write("# open-class entries: word<TAB>POS[<TAB>lemma]; first match wins\n")
        for word, pos, lemma in rows:
            if lemma:
                f.write(f"{word}\t{pos}\t{lemma}\n")
            else:
                f.write(f"{word}\t{pos}\n")
    print(f"wrote {len(rows)} entries to {out}")


if __name__ == "__main__":
    main()
