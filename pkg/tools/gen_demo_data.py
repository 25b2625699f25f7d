"""One-shot generator for the shipped demo data files.

Run from the repo root with ``PYTHONPATH=src python3 tools/gen_demo_data.py``.
The outputs are committed; this script documents how they were produced and
asserts the internal consistency the tests rely on (full embedding coverage
of the demo corpus, the worked-example token streams, etc.).
"""

import json
import random
import zlib
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "src" / "analogon" / "data"

# ---------------------------------------------------------------- demo corpus

PRODUCTS = [
    ("soapy-slider", "Soapy slider",
     "Unique 2 piece horizontal soap dish with a slide. "
     "extendable for different sizes of soap bars. "
     "it removes soapy water away from the bar of soap keeping it dryer to last longer. "
     "the soap dries quickly and lasts longer."),
    ("knife-rolodex", "Knife rolodex",
     "A knife rolodex with multiple slots for different sizes of knives. "
     "it keeps every blade clean and dry inside the case."),
    ("maximizing-phone-tablet", "Maximizing phone tablet",
     "A telescopic frame that expands to hold different sizes of phones. "
     "the display extends into a tablet for the user."),
    ("soap-saver", "Soap saver",
     "A soap saver that fuses old soap bars together so they do not slip through the cracks. "
     "it holds different soap bars in the shower."),
    ("touchless-soap-dispenser", "Touchless soap dispensing unit",
     "A touchless soap dispensing unit with a winding inner tube. "
     "the tube expands to reach inside any size of bottle."),
    ("yoga-mat-wash", "Yoga mat wash stack machine",
     "A wash stack machine that cleans and dries yoga mats. "
     "it keeps the mats dry for the next class."),
    ("camp-brew-coffee-maker", "Camp brew coffee maker",
     "Lightweight all in one coffee grinder and maker for camping and hiking. "
     "it tells the camper when the brew is done cooking outdoors."),
    ("laundry-folding-table", "Laundry folding table",
     "A table that folds down out of the laundry room wall. "
     "it provides a compact surface for folding piles of flexible garments."),
    ("velcro-pocket-shoe", "On and off velcro pocket shoe",
     "A small pocket that attaches to any shoe with a velcro strap. "
     "the pocket detaches quickly and stays inconspicuous on the ankle."),
    ("restsack", "The restsack",
     "A backpack that doubles as an outdoor chair stool. "
     "it carries items on the go and provides a portable seat for hiking."),
    ("dog-leash-light", "Dog leash light",
     "A small light that attaches to any dog leash for night walks. "
     "it keeps the dog easy to see in the dark."),
    ("adjustable-spice-rack", "Adjustable spice rack",
     "An adjustable spice rack that extends to fit different sizes of jars. "
     "it keeps every spice within reach of the cook."),
]

# ------------------------------------------------------------------- demo KB

KB_ENTRIES = [
    ("soap", "ToiletrySubstance", 1),
    ("soap", "WaterSolubleStuff", 2),
    ("soap", "PersonalProduct", 2),
    ("soap", "HouseholdItem", 3),
    ("soap", "ChemicalStuff", 4),
    ("size", "SpatialQuantity", 1),
    ("size", "PhysicalAttribute", 2),
    ("size", "AbstractThing", 4),
    ("remove", "RemovingSomething", 1),
    ("remove", "MovementEvent", 2),
    ("water", "LiquidTangibleThing", 1),
    ("water", "ChemicalCompound", 2),
    ("water", "NaturalStuff", 3),
    ("bar", "SolidTangibleThing", 1),
    ("bar", "Artifact", 2),
    ("knife", "CuttingDevice", 1),
    ("knife", "PersonalProduct", 2),
    ("knife", "KitchenItem", 2),
    ("knife", "Weapon", 3),
    ("phone", "ElectronicDevice", 1),
    ("phone", "PersonalProduct", 2),
    ("phone", "CommunicationDevice", 2),
    ("blade", "CuttingDevice", 1),
    ("blade", "SolidTangibleThing", 2),
    ("bottle", "Container", 1),
    ("bottle", "SolidTangibleThing", 2),
    ("jar", "Container", 1),
    ("jar", "SolidTangibleThing", 2),
    ("tube", "HollowObject", 1),
    ("tube", "Container", 2),
    ("backpack", "CarryingDevice", 1),
    ("backpack", "Container", 1),
    ("backpack", "PersonalProduct", 2),
    ("shoe", "WearableThing", 1),
    ("shoe", "PersonalProduct", 2),
    ("pocket", "Container", 1),
    ("pocket", "GarmentPart", 2),
    ("garment", "WearableThing", 1),
    ("garment", "FlexibleThing", 1),
    ("garment", "Artifact", 2),
    ("table", "Furniture", 1),
    ("table", "Artifact", 2),
    ("chair", "Furniture", 1),
    ("chair", "SeatingDevice", 1),
    ("chair", "Artifact", 2),
    ("stool", "Furniture", 1),
    ("stool", "SeatingDevice", 1),
    ("seat", "SeatingDevice", 1),
    ("seat", "Furniture", 2),
    ("mat", "FlexibleThing", 1),
    ("mat", "HouseholdItem", 2),
    ("leash", "RestrainingDevice", 1),
    ("leash", "PersonalProduct", 3),
    ("extend", "IncreasingSomething", 1),
    ("extend", "ChangeEvent", 2),
    ("expand", "IncreasingSomething", 1),
    ("expand", "ChangeEvent", 2),
    ("fold", "ReshapingSomething", 1),
    ("fold", "ChangeEvent", 2),
    ("wash", "CleaningEvent", 1),
    ("wash", "RemovingSomething", 2),
    ("clean", "CleaningEvent", 1),
    ("dry", "PhysicalAttribute", 2),
    ("carry", "TransportingSomething", 1),
    ("carry", "MovementEvent", 2),
    ("hold", "HoldingSomething", 1),
    ("fit", "AdjustingSomething", 2),
    ("adjust", "AdjustingSomething", 1),
    ("adjust", "ChangeEvent", 2),
    ("light", "IlluminationDevice", 1),
    ("light", "ElectronicDevice", 2),
    ("slot", "Opening", 1),
    ("slot", "SpatialThing", 2),
    ("frame", "SupportingStructure", 1),
    ("frame", "Artifact", 2),
    ("rack", "SupportingStructure", 1),
    ("rack", "Furniture", 2),
    ("machine", "Device", 1),
    ("machine", "Artifact", 2),
    ("coffee", "Beverage", 1),
    ("coffee", "FoodOrDrink", 2),
    ("spice", "FoodIngredient", 1),
    ("spice", "FoodOrDrink", 2),
]


def dog_entries():
    """dog carries well over 100 abstractions; only levels 1-3 are shown."""
    entries = [("dog", "DomesticatedAnimal", 1), ("dog", "CanisGenus", 1)]
    fillers = [
        "CompanionAnimal", "Mammal", "Carnivore", "Vertebrate", "AirBreathingVertebrate",
        "WarmBloodedAnimal", "SentientAnimal", "PerceptualAgent", "BiologicalLivingObject",
        "OrganicStuff", "AnimacyAttributeHolder", "SolidTangibleThing", "PhysicalEntity",
        "SpatialThing", "TemporalThing", "Individual", "Agent", "MobileObject",
        "NaturalTangibleStuff", "CompositeTangibleObject",
    ]
    level = 1
    index = 0
    while len(entries) < 120:
        name = f"{fillers[index % len(fillers)]}{index // len(fillers) + 1:02d}"
        entries.append(("dog", name, level))
        index += 1
        level = level % 6 + 1
    return entries


FALLBACK_ENTRIES = [
    # consulted only for lemmas the primary file lacks
    ("reef", "GeologicalFormation", 1),
    ("reef", "NaturalObject", 2),
    ("sail", "FabricObject", 1),
    ("sail", "Artifact", 2),
    ("cork", "Stopper", 1),
    ("cork", "SolidTangibleThing", 2),
    # shadowed by the primary KB's soap entries
    ("soap", "FallbackOnlyProperty", 1),
]

# --------------------------------------------------------------- embeddings

# 8 topic axes: bathroom/cleaning, kitchen/cutlery, adjustability,
# size/space, personal-product, outdoors, furniture/storage, misc.
TOPICS = {
    "bath": 0, "kitchen": 1, "adjust": 2, "space": 3,
    "personal": 4, "outdoor": 5, "furniture": 6, "misc": 7,
}

WORD_TOPICS = {
    # bathroom / cleaning cluster
    "soap": [("bath", 4.0), ("personal", 1.0)],
    "soapy": [("bath", 3.5)],
    "dish": [("bath", 3.0), ("furniture", 0.5)],
    "slide": [("bath", 2.0), ("misc", 1.0)],
    "slider": [("bath", 2.0), ("adjust", 1.0)],
    "saver": [("bath", 2.5), ("misc", 1.0)],
    "bar": [("bath", 3.0), ("misc", 1.0)],
    "water": [("bath", 2.5), ("misc", 0.5)],
    "dryer": [("bath", 2.0), ("misc", 1.0)],
    "dry": [("bath", 2.0), ("misc", 0.5)],
    "dries": [("bath", 2.0)],
    "wash": [("bath", 3.0)],
    "clean": [("bath", 2.5)],
    "shower": [("bath", 3.5)],
    "dispense": [("bath", 2.0), ("misc", 1.0)],
    "dispensing": [("bath", 2.0), ("misc", 1.0)],
    "touchless": [("bath", 1.5), ("misc", 1.5)],
    "wet": [("bath", 2.5)],
    "remove": [("bath", 1.0), ("adjust", 1.5), ("misc", 1.0)],
    "fuse": [("bath", 1.0), ("misc", 2.0)],
    "crack": [("misc", 2.5)],
    "slip": [("misc", 2.5)],
    "unique": [("misc", 2.0)],
    "horizontal": [("misc", 2.0), ("space", 0.5)],
    "keep": [("misc", 2.0)],
    "last": [("misc", 2.0)],
    "long": [("misc", 1.5), ("space", 1.0)],
    "old": [("misc", 2.0)],
    "quickly": [("misc", 2.0)],
    "away": [("misc", 2.0)],
    "2": [("misc", 1.0)],
    "piece": [("misc", 1.5), ("space", 0.5)],
    # kitchen / cutlery cluster
    "knife": [("kitchen", 4.0), ("personal", 1.0)],
    "rolodex": [("kitchen", 2.0), ("furniture", 1.5)],
    "blade": [("kitchen", 3.5)],
    "case": [("kitchen", 1.5), ("furniture", 1.5)],
    "slot": [("kitchen", 1.5), ("space", 1.5)],
    "cook": [("kitchen", 2.5), ("outdoor", 0.5)],
    "coffee": [("kitchen", 3.0), ("outdoor", 0.5)],
    "grinder": [("kitchen", 3.0)],
    "maker": [("kitchen", 2.5), ("misc", 0.5)],
    "brew": [("kitchen", 3.0)],
    "spice": [("kitchen", 3.5)],
    "jar": [("kitchen", 2.5), ("space", 0.5)],
    "bottle": [("kitchen", 2.0), ("bath", 1.0)],
    "food": [("kitchen", 3.0)],
    "drink": [("kitchen", 3.0)],
    # adjustability cluster
    "extendable": [("adjust", 3.0), ("space", 1.0)],
    "extend": [("adjust", 3.0), ("space", 0.5)],
    "expand": [("adjust", 3.0), ("space", 0.5)],
    "adjust": [("adjust", 3.5)],
    "adjustable": [("adjust", 3.0)],
    "telescopic": [("adjust", 2.5), ("misc", 0.5)],
    "different": [("adjust", 2.5), ("space", 1.0)],
    "multiple": [("adjust", 1.5), ("space", 1.0)],
    "fit": [("adjust", 2.5), ("space", 0.5)],
    "fold": [("adjust", 2.5), ("furniture", 0.5)],
    "foldable": [("adjust", 2.5), ("furniture", 0.5)],
    "flexible": [("adjust", 2.5)],
    "winding": [("adjust", 2.0), ("misc", 0.5)],
    "hold": [("adjust", 1.0), ("misc", 1.5)],
    "reach": [("adjust", 1.5), ("space", 1.0)],
    "attach": [("adjust", 2.0), ("misc", 1.0)],
    "detach": [("adjust", 2.0), ("misc", 1.0)],
    "double": [("adjust", 1.5), ("misc", 1.0)],
    # size / space cluster
    "size": [("space", 3.5)],
    "width": [("space", 3.5)],
    "small": [("space", 2.5)],
    "large": [("space", 2.5)],
    "compact": [("space", 2.5), ("adjust", 0.5)],
    "inner": [("space", 2.0)],
    "surface": [("space", 2.0), ("furniture", 1.0)],
    "frame": [("space", 1.5), ("furniture", 1.5)],
    "tube": [("space", 1.5), ("misc", 1.5)],
    "pile": [("space", 1.5), ("furniture", 1.0)],
    # personal product cluster (also the property-name pieces)
    "personal": [("personal", 3.5)],
    "product": [("personal", 3.0), ("misc", 0.5)],
    "phone": [("personal", 3.0), ("misc", 1.0)],
    "tablet": [("personal", 2.5), ("misc", 1.0)],
    "display": [("personal", 2.0), ("misc", 1.5)],
    "user": [("personal", 2.0), ("misc", 1.0)],
    "pocket": [("personal", 2.5), ("space", 0.5)],
    "shoe": [("personal", 3.0)],
    "velcro": [("personal", 1.5), ("adjust", 1.0)],
    "strap": [("personal", 2.0), ("adjust", 0.5)],
    "ankle": [("personal", 2.5)],
    "light": [("personal", 1.5), ("misc", 1.5)],
    "leash": [("personal", 2.0), ("outdoor", 1.0)],
    "dog": [("outdoor", 1.5), ("personal", 1.5), ("misc", 1.0)],
    "easy": [("misc", 2.0)],
    "see": [("misc", 2.0)],
    "dark": [("misc", 2.0)],
    "night": [("outdoor", 1.5), ("misc", 1.0)],
    "walk": [("outdoor", 2.5)],
    "safe": [("misc", 2.0)],
    # outdoors cluster
    "camp": [("outdoor", 3.5)],
    "camping": [("outdoor", 3.5)],
    "hike": [("outdoor", 3.5)],
    "camper": [("outdoor", 3.0)],
    "outdoor": [("outdoor", 3.0)],
    "outdoors": [("outdoor", 3.0)],
    "lightweight": [("outdoor", 1.5), ("space", 1.5)],
    "portable": [("outdoor", 1.5), ("adjust", 1.0), ("space", 0.5)],
    "backpack": [("outdoor", 3.0), ("personal", 1.0)],
    "stool": [("furniture", 3.0), ("outdoor", 0.5)],
    "chair": [("furniture", 3.0)],
    "seat": [("furniture", 2.5), ("outdoor", 0.5)],
    "carry": [("outdoor", 1.5), ("adjust", 1.0)],
    "item": [("misc", 2.0)],
    "go": [("misc", 2.0)],
    # furniture / household cluster
    "table": [("furniture", 3.5)],
    "laundry": [("furniture", 2.0), ("bath", 1.5)],
    "room": [("furniture", 2.5)],
    "wall": [("furniture", 2.5)],
    "garment": [("furniture", 1.5), ("personal", 1.5)],
    "rack": [("furniture", 2.5), ("kitchen", 1.0)],
    "stack": [("furniture", 2.0), ("space", 1.0)],
    "machine": [("furniture", 1.5), ("misc", 1.5)],
    "unit": [("misc", 2.0)],
    "provide": [("misc", 2.0)],
    "tell": [("misc", 2.0)],
    "class": [("misc", 2.0)],
    "yoga": [("personal", 2.0), ("outdoor", 1.0)],
    "mat": [("furniture", 2.0), ("personal", 1.0)],
    "every": [("misc", 1.0)],
    "one": [("misc", 1.0)],
    "inside": [("space", 1.5), ("misc", 0.5)],
    "within": [("space", 1.5), ("misc", 0.5)],
    "next": [("misc", 1.0)],
    "done": [("misc", 1.0)],
    "stay": [("misc", 2.0)],
    "together": [("misc", 2.0)],
    "inconspicuous": [("misc", 2.0), ("space", 0.5)],
    # property-name pieces used by the demo KB
    "spatial": [("space", 3.0)],
    "quantity": [("space", 2.5), ("misc", 0.5)],
    "removing": [("bath", 1.0), ("adjust", 1.5), ("misc", 1.0)],
    "something": [("misc", 2.0)],
    "liquid": [("bath", 2.5), ("misc", 0.5)],
    "tangible": [("misc", 2.0), ("space", 0.5)],
    "thing": [("misc", 2.0)],
    "solid": [("misc", 1.5), ("space", 1.0)],
    "toiletry": [("bath", 3.0), ("personal", 0.5)],
    "substance": [("misc", 2.0), ("bath", 0.5)],
    "soluble": [("bath", 2.0), ("misc", 1.0)],
    "stuff": [("misc", 2.0)],
    "household": [("furniture", 2.0), ("bath", 1.0)],
    "cutting": [("kitchen", 3.0)],
    "device": [("misc", 2.0), ("personal", 0.5)],
    "electronic": [("personal", 1.5), ("misc", 1.5)],
    "increasing": [("adjust", 2.5), ("space", 0.5)],
    "change": [("adjust", 2.0), ("misc", 1.0)],
    "event": [("misc", 2.0)],
    "domesticated": [("outdoor", 1.5), ("misc", 1.5)],
    "animal": [("outdoor", 2.0), ("misc", 1.0)],
}

DIM = 8


def word_vector(word):
    vec = [0.0] * DIM
    for topic, weight in WORD_TOPICS[word]:
        vec[TOPICS[topic]] += weight
    rng = random.Random(zlib.crc32(word.encode("utf-8")))
    return [round(v + rng.uniform(-0.15, 0.15), 4) for v in vec]


# ------------------------------------------------------------------ ratings

RATING_METHODS = ["FocusAbstracted", "FocusOnly", "OverallGloVe", "OverallPurpMech"]
RELEVANCE_MEANS = {"FocusAbstracted": 3.6, "FocusOnly": 3.7,
                   "OverallGloVe": 3.6, "OverallPurpMech": 2.5}
DISTANCE_MEANS = {"FocusAbstracted": 3.9, "FocusOnly": 2.9,
                  "OverallGloVe": 2.8, "OverallPurpMech": 4.0}


def likert(rng, mean):
    value = round(rng.gauss(mean, 0.9))
    return max(1, min(5, value))


def write_ratings(path):
    rng = random.Random(7)
    rows = []
    for scenario in range(1, 11):
        scenario_id = f"s{scenario:02d}"
        for method in RATING_METHODS:
            for rank in range(1, 11):
                match_id = f"{scenario_id}-{method}-{rank:02d}"
                relevance_rater = "r1" if (scenario + rank) % 2 else "r2"
                rows.append((match_id, scenario_id, method, relevance_rater,
                             "relevance", likert(rng, RELEVANCE_MEANS[method])))
                for rater in ("r1", "r2"):
                    rows.append((match_id, scenario_id, method, rater,
                                 "distance", likert(rng, DISTANCE_MEANS[method])))
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("match_id,scenario_id,method,rater_id,measure,value\n")
        for row in rows:
            handle.write(",".join(str(x) for x in row) + "\n")


# --------------------------------------------------------------- divergence

DIVERGENCE_PRODUCTS = [
    ("seed-soap-dish", "Extendable soap dish",
     "A horizontal soap dish with a slide. extendable for different sizes of soap bars."),
    ("cross-knife-block", "Knife block",
     "A knife block extendable for different widths of knife handles."),
    ("same-soap-saver", "Soap saver",
     "A soap saver that holds different soap bars."),
    ("filler-camp-stove", "Camp stove",
     "A camping stove for outdoor cooking."),
]

DIVERGENCE_KB = [
    ("soap", "PersonalProduct", 1),
    ("knife", "PersonalProduct", 1),
    ("size", "SpatialQuantity", 1),
    ("width", "SpatialQuantity", 1),
]

DIVERGENCE_VECTORS = {
    "soap":       [4, 0, 0, 0, 1, 0, 1, 0],
    "dish":       [3, 0, 0, 0, 1, 0, 0, 1],
    "slide":      [2, 0, 0, 0, 0, 0, 0, 2],
    "horizontal": [0, 0, 1, 0, 0, 0, 0, 2],
    "extendable": [0, 0, 3, 1, 0, 0, 0, 0],
    "different":  [0, 0, 3, 1, 0, 0, 0, 0],
    "size":       [0, 0, 0, 3, 0, 1, 0, 0],
    "width":      [0, 0, 0, 3, 0, 1, 0, 0],
    "bar":        [3, 0, 0, 0, 0, 0, 0, 1],
    "knife":      [0, 4, 0, 0, 1, 0, 0, 0],
    "block":      [0, 3, 0, 0, 0, 0, 0, 1],
    "handle":     [0, 3, 0, 0, 0, 0, 0, 1],
    "saver":      [3, 0, 0, 0, 0, 0, 0, 1],
    "hold":       [1, 0, 0, 0, 0, 0, 0, 3],
    "personal":   [0.5, 0.5, 0, 0, 3, 0, 0, 0],
    "product":    [0.5, 0.5, 0, 0, 3, 0, 0, 0],
    "spatial":    [0, 0, 0, 1, 0, 3, 0, 0],
    "quantity":   [0, 0, 0, 1, 0, 3, 0, 0],
    "camp":       [0, 0, 0, 0, 0, 5, 0, 0],
    "stove":      [0, 0, 0, 0, 0, 4, 0, 1],
    "outdoor":    [0, 0, 0, 0, 0, 4, 0, 0],
    "cook":       [0, 0, 0, 0, 0, 3, 0, 2],
}

DIVERGENCE_SELECTION = {
    "doc_id": "seed-soap-dish",
    "sentence_indices": [1],
    "ignored": ["bar"],
    "abstractions": {"size": "SpatialQuantity", "soap": "PersonalProduct"},
}


def write_jsonl(path, records):
    with open(path, "w", encoding="utf-8") as handle:
        for record in records:
            handle.write(json.dumps(record, separators=(",", ":")) + "\n")


def write_embeddings(path, table):
    with open(path, "w", encoding="utf-8") as handle:
        for word in sorted(table):
            values = " ".join(f"{v:g}" for v in table[word])
            handle.write(f"{word} {values}\n")


def main():
    write_jsonl(DATA / "demo_corpus.jsonl",
                [{"id": i, "title": t, "text": x} for i, t, x in PRODUCTS])
    kb_records = [{"term": t, "property": p, "level": l}
                  for t, p, l in KB_ENTRIES + dog_entries()]
    write_jsonl(DATA / "demo_kb.jsonl", kb_records)
    write_jsonl(DATA / "fallback_kb.jsonl",
                [{"term": t, "property": p, "level": l} for t, p, l in FALLBACK_ENTRIES])

    import analogon

    corpus = analogon.load_corpus(DATA / "demo_corpus.jsonl")
    lemmas = {t.lemma for d in corpus for s in d.sentences for t in s.tokens
              if not t.is_stopword}
    missing = sorted(lemmas - set(WORD_TOPICS))
    assert not missing, f"embedding recipe misses demo-corpus lemmas: {missing}"
    write_embeddings(DATA / "demo_embeddings.txt",
                     {w: word_vector(w) for w in WORD_TOPICS})

    # Purpose/mechanism export in the shape a trained encoder would produce.
    store = analogon.load_embeddings(DATA / "demo_embeddings.txt")
    fallback = analogon.fallback_purpose_mechanism(corpus, store)
    write_jsonl(DATA / "demo_purpmech.jsonl", [
        {"id": doc.id,
         "purpose": [round(float(v), 6) for v in fallback.purpose[doc.id]],
         "mechanism": [round(float(v), 6) for v in fallback.mechanism[doc.id]]}
        for doc in corpus
    ])

    write_ratings(DATA / "ratings_synthetic.csv")

    div = DATA / "divergence"
    write_jsonl(div / "corpus.jsonl",
                [{"id": i, "title": t, "text": x} for i, t, x in DIVERGENCE_PRODUCTS])
    write_jsonl(div / "kb.jsonl",
                [{"term": t, "property": p, "level": l} for t, p, l in DIVERGENCE_KB])
    write_embeddings(div / "embeddings.txt", DIVERGENCE_VECTORS)
    with open(div / "selection.json", "w", encoding="utf-8") as handle:
        json.dump(DIVERGENCE_SELECTION, handle, separators=(",", ":"))

    golden = analogon.FocusSelection(
        doc_id="soapy-slider", sentence_indices=frozenset({1}),
        ignored_lemmas=frozenset({"bar"}),
        abstraction_choices={"size": "SpatialQuantity", "soap": "PersonalProduct"})
    (DATA / "golden").mkdir(exist_ok=True)
    with open(DATA / "golden" / "fig2_selection.json", "w", encoding="utf-8") as handle:
        handle.write(golden.to_json())

    # The worked example must come out exactly right before we freeze anything.
    kb = analogon.load_kb(DATA / "demo_kb.jsonl", DATA / "fallback_kb.jsonl")
    doc = corpus.get("soapy-slider")
    assert [s.raw for s in doc.sentences][1] == "extendable for different sizes of soap bars."
    q1 = analogon.build_query(doc, golden, kb)
    assert [str(t) for t in q1.tokens] == \
        ["extendable", "different", "SpatialQuantity", "PersonalProduct"], q1.tokens
    sel2 = analogon.FocusSelection(
        doc_id="soapy-slider", sentence_indices=frozenset({2}),
        ignored_lemmas=frozenset({"soapy", "soap", "keep", "dryer", "last", "long"}),
        abstraction_choices={"remove": "RemovingSomething",
                             "water": "LiquidTangibleThing",
                             "bar": "SolidTangibleThing"})
    q2 = analogon.build_query(doc, sel2, kb)
    assert [str(t) for t in q2.tokens] == \
        ["RemovingSomething", "LiquidTangibleThing", "SolidTangibleThing"], q2.tokens
    print("demo data written and worked examples verified")


if __name__ == "__main__":
    main()
