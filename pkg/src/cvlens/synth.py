"""Deterministic seeded corpus generator.

Produces desk-scale corpora with exactly planned per-surface supports,
per-school section presence counts, planted noise values (typos, lowercase
and abbreviated forms tied to a canonical surface), and planned people for
the name-search paths (a collision name, a two-source person, a unique
name). Alongside the corpus it writes a ground-truth manifest the test
suite compares against an independent scan of the emitted files.

The built-in "showcase" spec plants frequency ratios that exercise every
suggestion behavior at a 10k-profile scale.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass, field, replace
from pathlib import Path

from .errors import InfeasibleSpec
from .model import (
    FIELD_LOCATION,
    AwardEntry,
    BasicInfo,
    CertificationEntry,
    EducationEntry,
    ExperienceEntry,
    FieldKind,
    Profile,
    SectionKind,
    SkillEntry,
    SourceTag,
    SummaryEntry,
    field_value,
    last_education,
    serialize_profile,
)
from .textnorm import normalize
from .corpus import CohortCriterion, degree_level

SHOWCASE_SEED = 42


@dataclass(frozen=True)
class PoolEntry:
    surface: str
    count: int


@dataclass(frozen=True)
class FieldPool:
    canonical: tuple[PoolEntry, ...]
    filler: tuple[str, ...]

    def target_total(self) -> int:
        return sum(e.count for e in self.canonical)


@dataclass(frozen=True)
class NoisePlant:
    field: FieldKind
    surface: str
    canonical: str
    kind: str  # misspelling | lowercase | abbreviation


@dataclass(frozen=True)
class SchoolPlan:
    name: str
    size: int
    award_rate: float
    skill_rate: float = 0.7
    certification_rate: float = 0.35
    summary_rate: float = 0.55
    second_education_rate: float = 0.35
    second_experience_rate: float = 0.45


@dataclass(frozen=True)
class PersonPlant:
    first: str
    last: str
    placements: tuple[tuple[str, SourceTag], ...]  # (school name, source)


@dataclass(frozen=True)
class GeneratorSpec:
    seed: int
    profile_count: int
    schools: tuple[SchoolPlan, ...]
    second_school_pool: tuple[str, ...]
    degrees: FieldPool
    titles: FieldPool
    organizations: FieldPool
    fields_of_study: FieldPool
    awards: FieldPool
    misspelling_rate: float = 0.0
    lowercase_rate: float = 0.0
    abbreviation_rate: float = 0.0
    noise: tuple[NoisePlant, ...] = ()
    people: tuple[PersonPlant, ...] = ()
    field_of_study_rate: float = 0.5
    partner_source_rate: float = 0.1

    def __post_init__(self):
        for name in ("misspelling_rate", "lowercase_rate", "abbreviation_rate",
                     "field_of_study_rate", "partner_source_rate"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0, 1]")


_FIRST_NAMES = (
    "Aaron", "Beatrice", "Chen", "Devi", "Elena", "Farhan", "Grace", "Hana",
    "Imran", "Jia", "Kavya", "Liang", "Mabel", "Nadia", "Omar", "Priya",
    "Qing", "Ravi", "Sofia", "Tomas", "Uma", "Viktor", "Wen", "Xiu",
    "Yusuf", "Zara", "Adrian", "Bella", "Colin", "Daphne", "Ethan", "Fiona",
)

_LAST_NAMES = (
    "Abdullah", "Bautista", "Chandra", "Dsouza", "Eng", "Fernandez", "Goh",
    "Hidayat", "Iyer", "Jafar", "Koh", "Lim", "Mehta", "Nair", "Ong",
    "Pillai", "Quek", "Rahman", "Seah", "Teo", "Utama", "Varma", "Wong",
    "Xie", "Yeo", "Zhang", "Ahmed", "Begum", "Cheong", "Devan", "Emmanuel",
    "Foo",
)

_HEADLINES = (
    "Open to opportunities",
    "Building things that matter",
    "Results-driven professional",
    "Passionate about technology",
    None,
    None,
)

_LOCATIONS = ("Singapore", "Jurong East", "Tampines", "Woodlands", None)

_SKILL_NAMES = (
    "Python", "Excel", "Project Management", "SQL", "Communication",
    "Data Analysis", "Leadership", "Java", "Negotiation", "Public Speaking",
)

_CERT_NAMES = (
    "AWS Certified Cloud Practitioner", "PMP", "Six Sigma Green Belt",
    "CFA Level I", "Certified ScrumMaster",
)

_SUMMARY_TEXTS = (
    "Experienced professional with a track record of delivering results.",
    "Detail-oriented team player with strong analytical skills.",
    "Driven individual who enjoys solving hard problems.",
)


def _noise_rate(spec: GeneratorSpec, kind: str) -> float:
    return {
        "misspelling": spec.misspelling_rate,
        "lowercase": spec.lowercase_rate,
        "abbreviation": spec.abbreviation_rate,
    }[kind]


@dataclass
class _ProfileStructure:
    school: SchoolPlan
    second_education: bool
    fos_flags: list[bool]
    n_experience: int
    has_award: bool
    n_skills: int
    has_certification: bool
    has_summary: bool


@dataclass
class GenerationResult:
    corpus_path: Path
    manifest_path: Path
    manifest: dict
    profiles: list[Profile] = field(repr=False, default_factory=list)


def _build_deck(
    rng: random.Random,
    slots: int,
    pool: FieldPool,
    noise: list[tuple[str, int]],
    what: str,
) -> list[str]:
    """A shuffled list of `slots` values: every canonical and noise surface
    exactly its planned number of times, fillers cycled over the rest."""
    deck: list[str] = []
    for entry in pool.canonical:
        deck.extend([entry.surface] * entry.count)
    for surface, count in noise:
        deck.extend([surface] * count)
    if len(deck) > slots:
        raise InfeasibleSpec(
            f"{what}: {len(deck)} planted values exceed {slots} available slots"
        )
    if len(deck) < slots and not pool.filler:
        raise InfeasibleSpec(f"{what}: no filler values to cover {slots - len(deck)} slots")
    i = 0
    while len(deck) < slots:
        deck.append(pool.filler[i % len(pool.filler)])
        i += 1
    rng.shuffle(deck)
    return deck


def _planned_noise(spec: GeneratorSpec) -> dict[FieldKind, list[tuple[str, int]]]:
    """Resolve each noise plant to an exact count from its rate and the
    canonical target it derives from."""
    targets: dict[FieldKind, dict[str, int]] = {}
    pools = {
        FieldKind.DEGREE_NAME: spec.degrees,
        FieldKind.JOB_TITLE: spec.titles,
        FieldKind.ORGANIZATION_NAME: spec.organizations,
        FieldKind.FIELD_OF_STUDY: spec.fields_of_study,
        FieldKind.AWARD_TITLE: spec.awards,
    }
    for fk, pool in pools.items():
        targets[fk] = {e.surface: e.count for e in pool.canonical}

    out: dict[FieldKind, list[tuple[str, int]]] = {fk: [] for fk in FieldKind}
    for plant in spec.noise:
        base = targets.get(plant.field, {}).get(plant.canonical)
        if base is None:
            raise InfeasibleSpec(
                f"noise plant {plant.surface!r} references unknown canonical {plant.canonical!r}"
            )
        count = round(_noise_rate(spec, plant.kind) * base)
        if count > 0:
            out[plant.field].append((plant.surface, count))
    return out


def generate(spec: GeneratorSpec, out_dir: Path | str) -> GenerationResult:
    """Generate a corpus and its ground-truth manifest under out_dir.

    Deterministic for a fixed spec: two runs produce byte-identical files.
    Raises InfeasibleSpec when planted counts cannot fit the slots implied
    by the school plans.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    if sum(s.size for s in spec.schools) != spec.profile_count:
        raise InfeasibleSpec("school sizes must sum to profile_count")

    rng = random.Random(spec.seed)

    # profile index -> school, names, sources
    school_of: list[SchoolPlan] = []
    blocks: dict[str, range] = {}
    start = 0
    for plan in spec.schools:
        blocks[plan.name] = range(start, start + plan.size)
        school_of.extend([plan] * plan.size)
        start += plan.size

    planted_names: dict[int, tuple[str, str, SourceTag]] = {}
    reserved_pairs = {(p.first, p.last) for p in spec.people}
    cursor = {plan.name: blocks[plan.name].start for plan in spec.schools}
    people_placed: dict[tuple[str, str], list[int]] = {}
    for person in spec.people:
        for school_name, source in person.placements:
            if school_name not in cursor:
                raise InfeasibleSpec(f"planted person references unknown school {school_name!r}")
            idx = cursor[school_name]
            if idx not in blocks[school_name]:
                raise InfeasibleSpec(f"too many planted people for school {school_name!r}")
            cursor[school_name] += 1
            planted_names[idx] = (person.first, person.last, source)
            people_placed.setdefault((person.first, person.last), []).append(idx)

    # Per-school exact membership for awards / skills / certifications /
    # summaries, drawn without replacement so the planted rates hold exactly.
    member_flags: dict[str, dict[int, set[int]]] = {}
    for plan in spec.schools:
        block = blocks[plan.name]
        flags = {}
        for slot, rate in enumerate(
            (plan.award_rate, plan.skill_rate, plan.certification_rate, plan.summary_rate)
        ):
            count = round(rate * plan.size)
            flags[slot] = set(rng.sample(list(block), count))
        member_flags[plan.name] = flags

    structures: list[_ProfileStructure] = []
    for i in range(spec.profile_count):
        plan = school_of[i]
        flags = member_flags[plan.name]
        second_edu = rng.random() < plan.second_education_rate
        fos_flags = [rng.random() < spec.field_of_study_rate for _ in range(1 + second_edu)]
        structures.append(
            _ProfileStructure(
                school=plan,
                second_education=second_edu,
                fos_flags=fos_flags,
                n_experience=2 if rng.random() < plan.second_experience_rate else 1,
                has_award=i in flags[0],
                n_skills=rng.randint(1, 3) if i in flags[1] else 0,
                has_certification=i in flags[2],
                has_summary=i in flags[3],
            )
        )

    edu_slots = sum(1 + s.second_education for s in structures)
    second_edu_slots = sum(1 for s in structures if s.second_education)
    exp_slots = sum(s.n_experience for s in structures)
    fos_slots = sum(sum(s.fos_flags) for s in structures)
    award_slots = sum(1 for s in structures if s.has_award)

    noise = _planned_noise(spec)
    degree_deck = iter(_build_deck(rng, edu_slots, spec.degrees, noise[FieldKind.DEGREE_NAME], "degrees"))
    title_deck = iter(_build_deck(rng, exp_slots, spec.titles, noise[FieldKind.JOB_TITLE], "titles"))
    org_deck = iter(
        _build_deck(rng, exp_slots, spec.organizations, noise[FieldKind.ORGANIZATION_NAME], "organizations")
    )
    fos_deck = iter(
        _build_deck(rng, fos_slots, spec.fields_of_study, noise[FieldKind.FIELD_OF_STUDY], "fields of study")
    )
    award_deck = iter(_build_deck(rng, award_slots, spec.awards, noise[FieldKind.AWARD_TITLE], "awards"))
    second_school_deck = iter(
        _build_deck(
            rng,
            second_edu_slots,
            FieldPool(canonical=(), filler=spec.second_school_pool),
            [],
            "second schools",
        )
    )

    profiles: list[Profile] = []
    for i, structure in enumerate(structures):
        if i in planted_names:
            first, last, source = planted_names[i]
        else:
            while True:
                first = rng.choice(_FIRST_NAMES)
                last = rng.choice(_LAST_NAMES)
                if (first, last) not in reserved_pairs:
                    break
            source = (
                SourceTag.PARTNER_PLATFORM
                if rng.random() < spec.partner_source_rate
                else SourceTag.PRIMARY_NETWORK
            )

        educations = []
        last_end = rng.randint(2012, 2023)
        educations.append(
            EducationEntry(
                school_name=structure.school.name,
                degree_name=next(degree_deck),
                field_of_study=next(fos_deck) if structure.fos_flags[0] else None,
                start_year=last_end - rng.randint(1, 5),
                end_year=last_end,
            )
        )
        if structure.second_education:
            earlier_end = last_end - rng.randint(2, 6)
            educations.append(
                EducationEntry(
                    school_name=next(second_school_deck),
                    degree_name=next(degree_deck),
                    field_of_study=next(fos_deck) if structure.fos_flags[1] else None,
                    start_year=earlier_end - rng.randint(1, 4),
                    end_year=earlier_end,
                )
            )

        experiences = []
        for _ in range(structure.n_experience):
            start_year = rng.randint(max(2005, last_end - 2), 2024)
            experiences.append(
                ExperienceEntry(
                    title=next(title_deck),
                    organization_name=next(org_deck),
                    start=f"{start_year:04d}-{rng.randint(1, 12):02d}",
                    end=f"{min(start_year + rng.randint(1, 4), 2025):04d}-{rng.randint(1, 12):02d}",
                )
            )

        sections: dict[SectionKind, list] = {
            SectionKind.EDUCATION: educations,
            SectionKind.EXPERIENCE: experiences,
        }
        if structure.has_award:
            sections[SectionKind.AWARD] = [
                AwardEntry(title=next(award_deck), year=rng.randint(2008, 2024))
            ]
        if structure.n_skills:
            sections[SectionKind.SKILL] = [
                SkillEntry(name=name) for name in rng.sample(_SKILL_NAMES, structure.n_skills)
            ]
        if structure.has_certification:
            sections[SectionKind.CERTIFICATION] = [
                CertificationEntry(name=rng.choice(_CERT_NAMES), year=rng.randint(2015, 2024))
            ]
        if structure.has_summary:
            sections[SectionKind.SUMMARY] = [SummaryEntry(text=rng.choice(_SUMMARY_TEXTS))]

        profiles.append(
            Profile(
                id=f"u{i:05d}",
                source=source,
                basic=BasicInfo(
                    first_name=first,
                    last_name=last,
                    headline=rng.choice(_HEADLINES),
                    location=rng.choice(_LOCATIONS),
                ),
                sections=sections,
            )
        )

    corpus_path = out_dir / "corpus.jsonl"
    with open(corpus_path, "w", encoding="utf-8") as fh:
        for profile in profiles:
            fh.write(serialize_profile(profile))
            fh.write("\n")

    manifest = _ground_truth(spec, profiles, people_placed)
    manifest_path = out_dir / "ground_truth.json"
    with open(manifest_path, "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, ensure_ascii=False, sort_keys=True, indent=2)
        fh.write("\n")

    return GenerationResult(
        corpus_path=corpus_path,
        manifest_path=manifest_path,
        manifest=manifest,
        profiles=profiles,
    )


def _ground_truth(
    spec: GeneratorSpec,
    profiles: list[Profile],
    people_placed: dict[tuple[str, str], list[int]],
) -> dict:
    """Exact expectations derived by counting the built profiles; an
    independent scan of the emitted corpus must reproduce all of it."""
    supports: dict[str, Counter] = {fk.value: Counter() for fk in FieldKind}
    for profile in profiles:
        for fk, (section, _) in FIELD_LOCATION.items():
            for entry in profile.sections.get(section, []):
                value = field_value(entry, fk)
                if value.strip():
                    supports[fk.value][value] += 1

    cohorts: dict[str, dict[str, dict]] = {
        CohortCriterion.LAST_SCHOOL.value: {},
        CohortCriterion.DEGREE_LEVEL.value: {},
        CohortCriterion.GLOBAL.value: {},
    }

    def bump(criterion: str, value: str, present: list[SectionKind]) -> None:
        slot = cohorts[criterion].setdefault(value, {"size": 0, "presence": {}})
        slot["size"] += 1
        for kind in present:
            slot["presence"][kind.value] = slot["presence"].get(kind.value, 0) + 1

    for profile in profiles:
        present = [k for k in SectionKind if profile.sections.get(k)]
        bump(CohortCriterion.GLOBAL.value, "", present)
        last = last_education(profile)
        if last is not None:
            key = normalize(last.school_name)
            if key:
                bump(CohortCriterion.LAST_SCHOOL.value, key, present)
            bump(CohortCriterion.DEGREE_LEVEL.value, degree_level(last.degree_name), present)

    noise_resolved = []
    planned = _planned_noise(spec)
    for plant in spec.noise:
        for surface, count in planned[plant.field]:
            if surface == plant.surface:
                noise_resolved.append(
                    {
                        "field": plant.field.value,
                        "surface": plant.surface,
                        "canonical": plant.canonical,
                        "kind": plant.kind,
                        "count": count,
                    }
                )

    by_id = {p.id: p for p in profiles}
    people = [
        {
            "first": first,
            "last": last,
            "profiles": [
                {
                    "id": f"u{idx:05d}",
                    "source": by_id[f"u{idx:05d}"].source.value,
                    "school": by_id[f"u{idx:05d}"].sections[SectionKind.EDUCATION][0].school_name,
                }
                for idx in sorted(indices)
            ],
        }
        for (first, last), indices in sorted(people_placed.items())
    ]

    return {
        "seed": spec.seed,
        "profile_count": spec.profile_count,
        "surface_supports": {fk: dict(sorted(c.items())) for fk, c in supports.items()},
        "cohorts": cohorts,
        "noise": noise_resolved,
        "people": people,
    }


# ---------------------------------------------------------------------------
# The built-in showcase scenario


def showcase_spec(seed: int = SHOWCASE_SEED) -> GeneratorSpec:
    """A 10k-profile scenario whose planted frequencies exercise every
    suggestion behavior: a dominant specific degree name over a terse one
    (ratio 12:11 between the top two), two parenthesized spellings of the
    same degree, an abbreviated and a misspelled job title with their
    canonical targets, two similarly-supported schools sharing a name
    prefix, a lowercase company variant dominated by its cased form, and
    award presence rates bracketing the default completeness threshold."""
    schools = (
        SchoolPlan("Velmore University", 400, award_rate=0.25, skill_rate=0.72,
                   certification_rate=0.40, summary_rate=0.60),
        SchoolPlan("Northgate Polytechnic", 400, award_rate=0.15, skill_rate=0.65,
                   certification_rate=0.30, summary_rate=0.50),
        SchoolPlan("Raffles Junior College", 400, award_rate=0.30, skill_rate=0.70,
                   certification_rate=0.35, summary_rate=0.55),
        SchoolPlan("Raffles Institution", 350, award_rate=0.22, skill_rate=0.68,
                   certification_rate=0.33, summary_rate=0.52),
        SchoolPlan("Tiny Institute of Craft", 10, award_rate=0.50, skill_rate=0.80,
                   certification_rate=0.40, summary_rate=0.60),
        SchoolPlan("Meridian State University", 1150, award_rate=0.24),
        SchoolPlan("Harborview University", 1100, award_rate=0.21),
        SchoolPlan("Eastgate University of Technology", 950, award_rate=0.19),
        SchoolPlan("Crestfield College", 900, award_rate=0.17),
        SchoolPlan("Stonebridge University", 850, award_rate=0.26),
        SchoolPlan("Lakeshore Institute of Management", 700, award_rate=0.23),
        SchoolPlan("Summit Technical University", 650, award_rate=0.18),
        SchoolPlan("Riverton College", 600, award_rate=0.28),
        SchoolPlan("Clearwater University", 550, award_rate=0.16),
        SchoolPlan("Ashworth University", 500, award_rate=0.22),
        SchoolPlan("Pinnacle Design Academy", 390, award_rate=0.20),
        SchoolPlan("Foxhall College", 100, award_rate=0.25),
    )
    return GeneratorSpec(
        seed=seed,
        profile_count=10000,
        schools=schools,
        second_school_pool=(
            "Oakdale Secondary School",
            "Hillcrest High School",
            "Brookfield Academy",
            "Maplewood Institute",
        ),
        degrees=FieldPool(
            canonical=(
                PoolEntry("Master's degree", 1200),
                PoolEntry("Master of Business Administration (MBA)", 1100),
                PoolEntry("Bachelor of Science (BSc)", 900),
                PoolEntry("Master of Science (MSc)", 800),
                PoolEntry("Bachelor of Arts (BA)", 750),
                PoolEntry("Bachelor of Science (B.Sc.)", 700),
                PoolEntry("Bachelor of Engineering (BEng)", 700),
                PoolEntry("Diploma in Business Administration", 500),
                PoolEntry("Doctor of Philosophy (PhD)", 400),
            ),
            filler=(
                "Diploma in Engineering",
                "Advanced Diploma in Accountancy",
                "Graduate Diploma in Marketing",
                "Higher Certificate in Logistics",
            ),
        ),
        titles=FieldPool(
            canonical=(
                PoolEntry("Software Engineer", 1500),
                PoolEntry("Marketing Manager", 900),
                PoolEntry("Accountant", 850),
                PoolEntry("Teaching Assistant", 800),
                PoolEntry("Business Analyst", 800),
                PoolEntry("Project Manager", 750),
                PoolEntry("Sales Executive", 700),
                PoolEntry("Data Analyst", 650),
                PoolEntry("Operations Manager", 600),
                PoolEntry("Human Resources Manager", 500),
                PoolEntry("Software Engg", 300),
            ),
            filler=(
                "Consultant",
                "Financial Controller",
                "Procurement Officer",
                "Customer Success Lead",
            ),
        ),
        organizations=FieldPool(
            canonical=(
                PoolEntry("DBS Bank", 600),
                PoolEntry("Singapore Airlines", 550),
                PoolEntry("Siemens", 500),
                PoolEntry("Grab", 400),
                PoolEntry("Shopee", 380),
                PoolEntry("Creative Technology", 300),
                PoolEntry("Keppel Corporation", 250),
                PoolEntry("Standard Chartered Bank", 240),
            ),
            filler=(
                "Micron Technology",
                "Horizon Logistics",
                "Apex Consulting Group",
                "BlueWave Media",
            ),
        ),
        fields_of_study=FieldPool(
            canonical=(
                PoolEntry("Computer Science", 800),
                PoolEntry("Business Administration", 700),
                PoolEntry("Economics", 500),
                PoolEntry("Mechanical Engineering", 450),
                PoolEntry("Accountancy", 400),
            ),
            filler=("Marketing", "Information Systems", "Psychology", "Finance"),
        ),
        awards=FieldPool(
            canonical=(
                PoolEntry("Dean's List", 600),
                PoolEntry("First Class Honours", 400),
                PoolEntry("Employee of the Month", 300),
                PoolEntry("Best Final Year Project", 200),
            ),
            filler=("Service Excellence Award", "Innovation Award", "Top Sales Award"),
        ),
        misspelling_rate=0.00375,  # 3 planted "Teaching asistant" out of 800
        lowercase_rate=0.006,      # 3 planted "siemens" out of 500
        abbreviation_rate=0.002,   # 3 planted "software engr" out of 1500
        noise=(
            NoisePlant(FieldKind.JOB_TITLE, "Teaching asistant", "Teaching Assistant", "misspelling"),
            NoisePlant(FieldKind.JOB_TITLE, "software engr", "Software Engineer", "abbreviation"),
            NoisePlant(FieldKind.ORGANIZATION_NAME, "siemens", "Siemens", "lowercase"),
        ),
        people=(
            PersonPlant(
                "Wei", "Tan",
                placements=(
                    ("Velmore University", SourceTag.PRIMARY_NETWORK),
                    ("Velmore University", SourceTag.PRIMARY_NETWORK),
                    ("Northgate Polytechnic", SourceTag.PRIMARY_NETWORK),
                    ("Raffles Junior College", SourceTag.PRIMARY_NETWORK),
                    ("Meridian State University", SourceTag.PRIMARY_NETWORK),
                ),
            ),
            PersonPlant(
                "Anita", "Rao",
                placements=(
                    ("Velmore University", SourceTag.PRIMARY_NETWORK),
                    ("Velmore University", SourceTag.PARTNER_PLATFORM),
                ),
            ),
            PersonPlant(
                "Odette", "Vasquez",
                placements=(("Crestfield College", SourceTag.PRIMARY_NETWORK),),
            ),
        ),
    )


def showcase_profile() -> Profile:
    """The demo profile the README walks through: every field suggestion
    kind plus the missing-awards completeness case, against the showcase
    corpus."""
    return Profile(
        id="showcase-001",
        source=SourceTag.PRIMARY_NETWORK,
        basic=BasicInfo(
            first_name="Jordan",
            last_name="Velez",
            headline="Software professional",
            location="Singapore",
        ),
        sections={
            SectionKind.EDUCATION: [
                EducationEntry(
                    school_name="Velmore University",
                    degree_name="Master",
                    start_year=2019,
                    end_year=2021,
                ),
                EducationEntry(
                    school_name="raffles",
                    degree_name="Bsc",
                    start_year=2013,
                    end_year=2016,
                ),
            ],
            SectionKind.EXPERIENCE: [
                ExperienceEntry(
                    title="software engr",
                    organization_name="siemens",
                    start="2021-07",
                ),
                ExperienceEntry(
                    title="Teaching asistant",
                    organization_name="Velmore University",
                    start="2019-08",
                    end="2021-05",
                ),
            ],
            SectionKind.SKILL: [SkillEntry(name="Python"), SkillEntry(name="SQL")],
            SectionKind.CERTIFICATION: [
                CertificationEntry(name="AWS Certified Cloud Practitioner", year=2022)
            ],
            SectionKind.SUMMARY: [
                SummaryEntry(text="Engineer with a teaching background.")
            ],
        },
    )


def spec_from_file(path: Path | str, seed: int | None = None) -> GeneratorSpec:
    """Load a GeneratorSpec from a JSON file (documented in the README);
    `seed` overrides the file's seed when given."""
    with open(path, "r", encoding="utf-8") as fh:
        d = json.load(fh)

    def pool(obj: dict) -> FieldPool:
        return FieldPool(
            canonical=tuple(PoolEntry(e["surface"], e["count"]) for e in obj.get("canonical", [])),
            filler=tuple(obj.get("filler", [])),
        )

    spec = GeneratorSpec(
        seed=d.get("seed", 0),
        profile_count=d["profile_count"],
        schools=tuple(
            SchoolPlan(
                name=s["name"],
                size=s["size"],
                award_rate=s.get("award_rate", 0.2),
                skill_rate=s.get("skill_rate", 0.7),
                certification_rate=s.get("certification_rate", 0.35),
                summary_rate=s.get("summary_rate", 0.55),
                second_education_rate=s.get("second_education_rate", 0.35),
                second_experience_rate=s.get("second_experience_rate", 0.45),
            )
            for s in d["schools"]
        ),
        second_school_pool=tuple(d.get("second_school_pool", ["Oakdale Secondary School"])),
        degrees=pool(d.get("degrees", {})),
        titles=pool(d.get("titles", {})),
        organizations=pool(d.get("organizations", {})),
        fields_of_study=pool(d.get("fields_of_study", {})),
        awards=pool(d.get("awards", {})),
        misspelling_rate=d.get("misspelling_rate", 0.0),
        lowercase_rate=d.get("lowercase_rate", 0.0),
        abbreviation_rate=d.get("abbreviation_rate", 0.0),
        noise=tuple(
            NoisePlant(FieldKind(n["field"]), n["surface"], n["canonical"], n["kind"])
            for n in d.get("noise", [])
        ),
        people=tuple(
            PersonPlant(
                p["first"],
                p["last"],
                placements=tuple((pl["school"], SourceTag(pl["source"])) for pl in p["placements"]),
            )
            for p in d.get("people", [])
        ),
        field_of_study_rate=d.get("field_of_study_rate", 0.5),
        partner_source_rate=d.get("partner_source_rate", 0.1),
    )
    if seed is not None:
        spec = replace(spec, seed=seed)
    return spec
