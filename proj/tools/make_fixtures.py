#!/usr/bin/env python3
# Copyright 2026 The Streetmaps Authors
# SPDX-License-Identifier: Apache-2.0
"""Regenerates the fixture corpus under fixtures/.

Street attributes are hand-entered; way geometries are short synthetic
polylines placed near each street's real location.

    python3 tools/make_fixtures.py [fixtures-dir]
"""

import csv
import html
import io
import json
import math
import pathlib
import sys

ROOT = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent / "fixtures"

# ---------------------------------------------------------------- geometry


def line(lon, lat, bearing, length_m, vertices=3):
    b = math.radians(bearing)
    step = length_m / (vertices - 1)
    pts = []
    for i in range(vertices):
        d = step * i
        dy = d * math.cos(b) / 111320.0
        dx = d * math.sin(b) / (111320.0 * math.cos(math.radians(lat)))
        pts.append([round(lon + dx, 7), round(lat + dy, 7)])
    return pts


def chain(lon, lat, bearing, length_m, parts):
    """`parts` consecutive ways sharing end points."""
    full = line(lon, lat, bearing, length_m, parts * 2 + 1)
    return [full[i * 2:i * 2 + 3] for i in range(parts)]


class Extract:
    def __init__(self, first_id):
        self.next_id = first_id
        self.features = []

    def add(self, name, district, coords_list):
        for coords in coords_list:
            self.features.append({
                "type": "Feature",
                "properties": {"way_id": str(self.next_id), "name": name, "district": district,
                               "highway": "residential"},
                "geometry": {"type": "LineString", "coordinates": coords},
            })
            self.next_id += 1

    def write(self, path):
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps({"type": "FeatureCollection", "features": self.features},
                                   ensure_ascii=False, indent=1) + "\n", encoding="utf-8")


def write_csv(path, header, rows):
    path.parent.mkdir(parents=True, exist_ok=True)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    path.write_text(buf.getvalue(), encoding="utf-8")


# ---------------------------------------------------------------- Paris

Q5 = "http://www.wikidata.org/entity/Q5"
BATTLE = "http://www.wikidata.org/entity/Q178561"

# label, district, inception, eponym, class, gender, occupations, dob, dod, country, osm
PARIS = [
    ("Boulevard Haussmann", "8e arrondissement", "1864", "Georges-Eugène Haussmann", Q5, "male",
     ["civil servant"], "1809-03-27", "1891-01-11", "France", ("chain", 2.3150, 48.8745, 95, 2100, 3)),
    ("Avenue Victor-Hugo", "16e arrondissement", "1881", "Victor Hugo", Q5, "male", ["writer", "poet"],
     "1802-02-26", "1885-05-22", "France", ("rename", "Avenue Victor Hugo", 2.2870, 48.8700, 240, 1500)),
    ("Avenue Émile-Zola", "15e arrondissement", "1907", "Émile Zola", Q5, "male", ["novelist"],
     "1840-04-02", "1902-09-29", "France", (2.2890, 48.8470, 120, 1200)),
    ("Rue Pierre-et-Marie-Curie", "5e arrondissement", "1934", "Marie Curie", Q5, "female",
     ["physicist", "chemist"], "1867-11-07", "1934-07-04", "Poland", (2.3440, 48.8440, 80, 400)),
    ("Avenue Mozart", "16e arrondissement", "1867", "Wolfgang Amadeus Mozart", Q5, "male", ["composer"],
     "1756-01-27", "1791-12-05", "Holy Roman Empire", (2.2700, 48.8560, 20, 1300)),
    ("Rue de Rivoli", "1er arrondissement", "1804", "Battle of Rivoli", BATTLE, "", [], "", "", "", None),
    ("Rue Molière", "1er arrondissement", "1867", "Molière", Q5, "male", ["playwright", "actor"],
     "1622-01-15", "1673-02-17", "France", ("homonym", 2.3360, 48.8655, 160, 250,
                                            "12e arrondissement", 2.4060, 48.8330)),
    ("Avenue Foch", "16e arrondissement", "1929", "Ferdinand Foch", Q5, "male", ["military officer"],
     "1851-10-02", "1929-03-20", "France", (2.2800, 48.8710, 70, 1300)),
    ("Rue Lamarck", "18e arrondissement", "1867", "Jean-Baptiste de Lamarck", Q5, "male", ["naturalist"],
     "1744-08-01", "1829-12-18", "Kingdom of France", (2.3390, 48.8895, 90, 1100)),
    ("Boulevard Pasteur", "15e arrondissement", "1875", "Louis Pasteur", Q5, "male", ["chemist"],
     "1822-12-27", "1895-09-28", "France", (2.3130, 48.8420, 150, 900)),
    ("Avenue Georges-Mandel", "16e arrondissement", "1945", "Georges Mandel", Q5, "male", ["politician"],
     "1885-06-05", "1944-07-07", "France", (2.2820, 48.8640, 60, 700)),
    ("Place Édith-Piaf", "20e arrondissement", "1978", "Édith Piaf", Q5, "female", ["singer"],
     "1915-12-19", "1963-10-10", "France", (2.4040, 48.8630, 0, 120)),
    ("Rue George-Sand", "16e arrondissement", "1877", "George Sand", Q5, "female", ["novelist"],
     "1804-07-01", "1876-06-08", "France", (2.2660, 48.8500, 110, 450)),
    ("Square Louise-Michel", "18e arrondissement", "2004", "Louise Michel", Q5, "female", ["teacher"],
     "1830-05-29", "1905-01-09", "France", (2.3430, 48.8850, 10, 150)),
    ("Avenue Jean-Jaurès", "19e arrondissement", "1914", "Jean Jaurès", Q5, "male", ["politician"],
     "1859-09-03", "1914-07-31", "France", (2.3700, 48.8800, 60, 1700)),
    ("Boulevard Voltaire", "11e arrondissement", "1870", "Voltaire", Q5, "male", ["philosopher", "writer"],
     "1694-11-21", "1778-05-30", "France", ("chain", 2.3650, 48.8660, 130, 2800, 2)),
    ("Rue Lavoisier", "8e arrondissement", "1865", "Antoine Lavoisier", Q5, "male", ["chemist"],
     "1743-08-26", "1794-05-08", "Kingdom of France", (2.3200, 48.8740, 90, 300)),
    ("Avenue Montaigne", "8e arrondissement", "1850", "Michel de Montaigne", Q5, "male", ["philosopher"],
     "1533-02-28", "1592-09-13", "Kingdom of France", (2.3020, 48.8650, 40, 600)),
    ("Rue Rambuteau", "3e arrondissement", "1839", "Claude-Philibert Barthelot de Rambuteau", Q5, "male",
     ["prefect"], "1781-11-09", "1869-04-23", "France", (2.3460, 48.8620, 80, 700)),
    ("Boulevard Malesherbes", "8e arrondissement", "1861", "Guillaume-Chrétien de Lamoignon de Malesherbes",
     Q5, "male", ["lawyer", "statesman"], "1721-12-06", "1794-04-22", "Kingdom of France",
     (2.3160, 48.8730, 330, 2000)),
    ("Rue Saint-Lazare", "9e arrondissement", "", "Lazarus of Bethany", Q5, "male", [], "", "", "",
     (2.3230, 48.8770, 85, 1100)),
    ("Boulevard de Sébastopol", "2e arrondissement", "1855", "Siege of Sevastopol", BATTLE, "", [], "", "", "",
     None),
    ("Avenue Simone-Veil", "17e arrondissement", "2018", "Simone Veil", Q5, "female", ["politician", "lawyer"],
     "1927-07-13", "2017-06-30", "France", (2.3000, 48.8800, 45, 350)),
    ("Rue Berlioz", "16e arrondissement", "1864", "Hector Berlioz", Q5, "male", ["composer"],
     "1803-12-11", "1869-03-08", "France", (2.2840, 48.8730, 170, 250)),
    ("Place Joséphine-Baker", "14e arrondissement", "2016", "Joséphine Baker", Q5, "female",
     ["dancer", "singer"], "1906-06-03", "1975-04-12", "United States of America", (2.3240, 48.8420, 0, 100)),
    ("Rue Daval", "11e arrondissement", "1868", "Pierre Daval", Q5, "male", ["architect"],
     "1890-01-01", "1820-01-01", "France", (2.3710, 48.8545, 160, 250)),
    ("Allée Claude-Cahun", "4e arrondissement", "2019", "Claude Cahun", Q5, "female", ["photographer"],
     "1894-10-25", "1954-12-08", "France", None),
]


def sparql_value(kind, value, datatype=None):
    v = {"type": kind, "value": value}
    if datatype:
        v["datatype"] = datatype
    return v


def paris():
    bindings = []
    ex = Extract(4000001)
    for n, (label, district, inception, eponym, cls, gender, occs, dob, dod, country, osm) in enumerate(PARIS):
        street = f"http://www.wikidata.org/entity/Q{9100000 + n}"
        for occ in occs or [""]:
            b = {
                "street": sparql_value("uri", street),
                "streetLabel": sparql_value("literal", label),
                "districtLabel": sparql_value("literal", district),
                "eponym": sparql_value("uri", f"http://www.wikidata.org/entity/Q{9200000 + n}"),
                "eponymLabel": sparql_value("literal", eponym),
                "eponymClass": sparql_value("uri", cls),
            }
            if inception:
                b["inception"] = sparql_value("literal", inception + "-01-01T00:00:00Z",
                                              "http://www.w3.org/2001/XMLSchema#dateTime")
            if gender:
                b["genderLabel"] = sparql_value("literal", gender)
            if occ:
                b["occupationLabel"] = sparql_value("literal", occ)
            if dob:
                b["dob"] = sparql_value("literal", dob + "T00:00:00Z", "http://www.w3.org/2001/XMLSchema#dateTime")
            if dod:
                b["dod"] = sparql_value("literal", dod + "T00:00:00Z", "http://www.w3.org/2001/XMLSchema#dateTime")
            if country:
                b["countryLabel"] = sparql_value("literal", country)
            if cls == Q5:
                slug = eponym.replace(" ", "_")
                b["article"] = sparql_value("uri", f"https://en.wikipedia.org/wiki/{slug}")
                b["image"] = sparql_value("uri",
                                          f"http://commons.wikimedia.org/wiki/Special:FilePath/{slug}.jpg")
            bindings.append(b)
        add_osm(ex, label, district, osm)
    ex.add("Rue de Rivoli", "1er arrondissement", [line(2.3330, 48.8630, 115, 2900, 4)])
    ex.add("Boulevard de Sébastopol", "2e arrondissement", [line(2.3500, 48.8580, 5, 1500)])
    ex.add("Rue des Écoles", "5e arrondissement", [line(2.3440, 48.8490, 100, 900)])

    doc = {
        "head": {"vars": ["street", "streetLabel", "districtLabel", "inception", "eponym", "eponymLabel",
                          "eponymClass", "genderLabel", "occupationLabel", "dob", "dod", "countryLabel",
                          "article", "image"]},
        "results": {"bindings": bindings},
    }
    out = ROOT / "paris" / "wikidata" / "streets.sparql.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(doc, ensure_ascii=False, indent=1) + "\n", encoding="utf-8")
    ex.write(ROOT / "paris" / "osm" / "extract.geojson")


def add_osm(ex, name, district, osm):
    if osm is None:
        return
    if osm[0] == "chain":
        _, lon, lat, bearing, length, parts = osm
        ex.add(name, district, chain(lon, lat, bearing, length, parts))
    elif osm[0] == "rename":
        _, other, lon, lat, bearing, length = osm
        ex.add(other, district, [line(lon, lat, bearing, length)])
    elif osm[0] == "homonym":
        _, lon, lat, bearing, length, far_district, far_lon, far_lat = osm
        ex.add(name, district, [line(lon, lat, bearing, length)])
        ex.add(name, far_district, [line(far_lon, far_lat, bearing, length)])
    else:
        lon, lat, bearing, length = osm
        ex.add(name, district, [line(lon, lat, bearing, length)])


# ---------------------------------------------------------------- Vienna

# page, name, bezirk, datum, honoree, link, geschlecht, beruf, geboren, gestorben, herkunft, osm
VIENNA = [
    ("Mozartgasse", "Mozartgasse", "4., Wieden", "1862", "Wolfgang Amadeus Mozart", "Wolfgang_Amadeus_Mozart",
     "männlich", "Komponist", "27. Jänner 1756", "5. Dezember 1791", "Heiliges Römisches Reich",
     (16.3680, 48.1960, 30, 300)),
    ("Mozartgasse_(Kurzfassung)", "Mozartgasse", "4., Wieden", "", "Wolfgang Amadeus Mozart", "", "", "", "", "",
     "", None),
    ("Beethovenplatz", "Beethovenplatz", "1., Innere Stadt", "1880", "Ludwig van Beethoven",
     "Ludwig_van_Beethoven", "männlich", "Komponist", "17.12.1770", "26.3.1827", "Deutschland",
     (16.3775, 48.2020, 0, 120)),
    ("Haydngasse", "Haydngasse", "6., Mariahilf", "1862", "Joseph Haydn", "Joseph_Haydn", "männlich",
     "Komponist", "31. März 1732", "31. Mai 1809", "Österreich", (16.3500, 48.1930, 60, 250)),
    ("Schubertring", "Schubertring", "1., Innere Stadt", "1928", "Franz Schubert", "Franz_Schubert", "männlich",
     "Komponist", "1797-01-31", "1828-11-19", "Österreich", (16.3760, 48.2030, 150, 500)),
    ("Maria-Theresien-Straße", "Maria-Theresien-Straße", "1., Innere Stadt", "1870", "Maria Theresia",
     "Maria_Theresia", "weiblich", "Kaiserin", "13. Mai 1717", "29. November 1780", "Österreich",
     (16.3640, 48.2160, 45, 600)),
    ("Bertha-von-Suttner-Gasse", "Bertha-von-Suttner-Gasse", "21., Floridsdorf", "1919", "Bertha von Suttner",
     "Bertha_von_Suttner", "weiblich", "Schriftstellerin", "9. Juni 1843", "21. Juni 1914", "Böhmen",
     (16.4010, 48.2570, 100, 300)),
    ("Sigmund-Freud-Park", "Sigmund-Freud-Park", "9., Alsergrund", "1949", "Sigmund Freud", "Sigmund_Freud",
     "männlich", "Neurologe", "6. Mai 1856", "23. September 1939", "Österreich", (16.3590, 48.2150, 10, 200)),
    ("Dr.-Karl-Lueger-Platz", "Dr.-Karl-Lueger-Platz", "1., Innere Stadt", "1926", "Karl Lueger", "Karl_Lueger",
     "männlich", "Politiker", "24. Oktober 1844", "10. März 1910", "Österreich", (16.3800, 48.2080, 0, 150)),
    ("Radetzkystrasse", "Radetzkystr.", "3., Landstraße", "1876", "Joseph Wenzel Radetzky von Radetz",
     "Joseph_Wenzel_Radetzky_von_Radetz", "männlich", "Feldmarschall", "2. November 1766", "5. Jänner 1858",
     "Böhmen", ("rename", "Radetzkystraße", 16.3900, 48.2100, 160, 450)),
    ("Billrothstrasse", "Billrothstrasse", "19., Döbling", "1894", "Theodor Billroth", "Theodor_Billroth",
     "männlich", "Chirurg", "26. April 1829", "6. Februar 1894", "Preußen",
     ("rename", "Billrothstraße", 16.3450, 48.2390, 130, 900)),
    ("Johann-Strauß-Gasse", "Johann-Strauß-Gasse", "4., Wieden", "1899", "Johann Strauss (Sohn)",
     "Johann_Strauss_(Sohn)", "männlich", "Komponist", "25. Oktober 1825", "3. Juni 1899", "Österreich",
     (16.3640, 48.1910, 70, 500)),
    ("Prinz-Eugen-Straße", "Prinz-Eugen-Straße", "4., Wieden", "1862", "Eugen von Savoyen", "Eugen_von_Savoyen",
     "männlich", "Feldherr", "18. Oktober 1663", "21. April 1736", "Frankreich",
     ("chain", 16.3760, 48.1980, 170, 1200, 2)),
    ("Rosa-Mayreder-Park", "Rosa-Mayreder-Park", "4., Wieden", "2006", "Rosa Mayreder", "Rosa_Mayreder",
     "weiblich", "Frauenrechtlerin", "30. November 1858", "19. Jänner 1938", "Österreich",
     (16.3700, 48.1970, 0, 100)),
    ("Hedy-Lamarr-Weg", "Hedy-Lamarr-Weg", "12., Meidling", "2014", "Hedy Lamarr", "Hedy_Lamarr", "weiblich",
     "Schauspielerin", "9. November 1914", "19. Jänner 2000", "Österreich", (16.3260, 48.1750, 90, 200)),
    ("Stephansplatz", "Stephansplatz", "1., Innere Stadt", "", "Stephanus", "Stephanus", "männlich", "Diakon",
     "", "", "", (16.3725, 48.2085, 80, 150)),
    ("Kärntner_Straße", "Kärntner Straße", "1., Innere Stadt", "1257", "", "", "", "", "", "", "",
     (16.3705, 48.2035, 170, 700)),
    ("Lisztstraße", "Lisztstraße", "3., Landstraße", "1894", "Franz Liszt", "Franz_Liszt", "männlich",
     "Komponist", "22. Oktober 1811", "31. Juli 1886", "Ungarn", (16.3800, 48.2000, 110, 250)),
    ("Semmelweisgasse", "Semmelweisgasse", "21., Floridsdorf", "1925", "Ignaz Semmelweis", "Ignaz_Semmelweis",
     "männlich", "Arzt", "1. Juli 1818", "13. August 1865", "Ungarn", None),
]

PAGE = """<!DOCTYPE html>
<html lang="de">
<head><meta charset="utf-8"><title>{title} – Wien Geschichte Wiki</title></head>
<body>
<h1 class="firstHeading">{title}</h1>
<table class="infobox wgw-strasse">
{rows}
</table>
<p>{title} ist eine Verkehrsfläche in Wien.</p>
</body>
</html>
"""

PERSON_PAGE = """<!DOCTYPE html>
<html lang="de">
<head><meta charset="utf-8"><title>Wolfgang Amadeus Mozart – Wien Geschichte Wiki</title></head>
<body>
<h1 class="firstHeading">Wolfgang Amadeus Mozart</h1>
<p>Wolfgang Amadeus Mozart, Komponist, wirkte ab 1781 in Wien.</p>
</body>
</html>
"""


def vienna():
    pages = ROOT / "vienna" / "wikihistory" / "pages"
    pages.mkdir(parents=True, exist_ok=True)
    ex = Extract(7000001)
    for (page, name, bezirk, datum, honoree, link, gender, beruf, born, died, herkunft, osm) in VIENNA:
        rows = [("Name", html.escape(name))]
        if bezirk:
            rows.append(("Bezirk", html.escape(bezirk)))
        if datum:
            rows.append(("Datum der Benennung", datum))
        if honoree:
            cell = html.escape(honoree)
            if link:
                cell = f'<a href="https://de.wikipedia.org/wiki/{link}">{cell}</a>'
            rows.append(("Benannt nach", cell))
        for label, value in (("Geschlecht", gender), ("Beruf", beruf), ("Geburtsdatum", born),
                             ("Sterbedatum", died), ("Herkunft", herkunft)):
            if value:
                rows.append((label, html.escape(value)))
        if link:
            rows.append(("Bild", f'<img src="https://upload.wikimedia.org/portraits/{link}.jpg" alt="">'))
        body = "\n".join(f"<tr><th>{k}</th><td>{v}</td></tr>" for k, v in rows)
        (pages / f"{page}.html").write_text(PAGE.format(title=html.escape(name), rows=body), encoding="utf-8")
        if osm is not None:
            district = bezirk.split(", ", 1)[1]
            osm_name = osm[1] if osm[0] == "rename" else name
            add_osm(ex, osm_name, district, osm)
    (pages / "Wolfgang_Amadeus_Mozart.html").write_text(PERSON_PAGE, encoding="utf-8")
    ex.add("Graben", "Innere Stadt", [line(16.3695, 48.2085, 95, 300)])
    ex.add("Ringstraße", "Innere Stadt", [line(16.3600, 48.2070, 170, 900)])
    ex.write(ROOT / "vienna" / "osm" / "extract.geojson")


# ---------------------------------------------------------------- London

# street, district, honoree, per-annotator rows (denomination, gender, occupation, country, dob, dod), osm
LONDON = [
    ("Regent Street", "City of Westminster", "George IV",
     [("1819", "male", "monarch", "United Kingdom", "1762", "1830"),
      ("1819", "male", "king", "United Kingdom", "1762", "1830"),
      ("1819", "male", "monarch", "United Kingdom", "1762", "1830")],
     ("chain", -0.1420, 51.5160, 160, 1300, 2)),
    ("Victoria Street", "City of Westminster", "Queen Victoria",
     [("1851", "female", "monarch", "United Kingdom", "1819", "1901"),
      ("1851", "female", "monarch", "United Kingdom", "1819", "1901"),
      ("1852", "female", "queen", "United Kingdom", "1819", "1901")],
     (-0.1440, 51.4965, 65, 1100)),
    ("Albert Embankment", "Lambeth", "Prince Albert",
     [("1869", "male", "prince consort", "Germany", "1819", "1861"),
      ("1869", "male", "prince consort", "Germany", "1819", "1861"),
      ("1869", "male", "royal", "Germany", "1819", "1861")],
     (-0.1240, 51.4860, 10, 1300)),
    ("Wellington Road", "City of Westminster", "Arthur Wellesley, 1st Duke of Wellington",
     [("1824", "male", "army officer", "Ireland", "1769", "1852"),
      ("1824", "male", "statesman", "Ireland", "1769", "1852"),
      ("1824", "male", "army officer", "Ireland", "1769", "1852")],
     (-0.1740, 51.5310, 350, 900)),
    ("Newton Street", "Camden", "Isaac Newton",
     [("1859", "male", "physicist", "England", "1643", "1727"),
      ("1859", "male", "physicist", "England", "1643", "1727"),
      ("", "male", "mathematician", "England", "1643", "1727")],
     (-0.1220, 51.5160, 30, 200)),
    ("Gladstone Street", "Southwark", "William Ewart Gladstone",
     [("1870", "male", "politician", "United Kingdom", "1809", "1898"),
      ("1870", "male", "politician", "United Kingdom", "1809", "1898"),
      ("1870", "male", "prime minister", "United Kingdom", "1809", "1898")],
     (-0.1050, 51.4980, 120, 250)),
    ("Cromwell Road", "Kensington and Chelsea", "Oliver Cromwell",
     [("1855", "male", "politician", "England", "1599", "1658"),
      ("1855", "male", "military leader", "England", "1599", "1658"),
      ("1855", "male", "politician", "England", "1599", "1658")],
     ("chain", -0.2000, 51.4945, 85, 2000, 2)),
    ("King William Street", "City of London", "William IV",
     [("1829", "male", "monarch", "United Kingdom", "1765", "1837"),
      ("1829", "male", "monarch", "United Kingdom", "1765", "1837"),
      ("1829", "male", "monarch", "United Kingdom", "1765", "1837")],
     (-0.0880, 51.5110, 160, 350)),
    ("Brunel Rd", "Southwark", "Isambard Kingdom Brunel",
     [("1875", "male", "engineer", "United Kingdom", "1806", "1859"),
      ("1875", "male", "civil engineer", "United Kingdom", "1806", "1859"),
      ("1875", "male", "engineer", "United Kingdom", "1806", "1859")],
     ("rename", "Brunel Road", -0.0530, 51.4990, 100, 700)),
    ("Handel Street", "Camden", "George Frideric Handel",
     [("1888", "male", "composer", "Germany", "1685", "1759"),
      ("1888", "male", "composer", "Germany", "1685", "1759"),
      ("1888", "male", "composer", "Kingdom of Great Britain", "1685", "1759")],
     (-0.1230, 51.5250, 90, 250)),
    ("Garrick Street", "City of Westminster", "David Garrick",
     [("1859", "male", "actor", "England", "1717", "1779"),
      ("1859", "male", "actor", "England", "1717", "1779"),
      ("1859", "male", "playwright", "England", "1717", "1779")],
     (-0.1265, 51.5110, 40, 200)),
    ("Saint George's Road", "Southwark", "Saint George",
     [("", "male", "saint", "", "", ""),
      ("", "male", "soldier", "", "", "")],
     ("rename", "St George's Road", -0.1060, 51.4960, 130, 800)),
    ("Pankhurst Close", "Islington", "Emmeline Pankhurst",
     [("1990", "female", "suffragette", "United Kingdom", "1858", "1928"),
      ("1990", "female", "suffragette", "United Kingdom", "1858", "1928"),
      ("1990", "female", "political activist", "United Kingdom", "1858", "1928")],
     (-0.1100, 51.5450, 0, 100)),
    ("Nightingale Place", "Kensington and Chelsea", "Florence Nightingale",
     [("1911", "female", "nurse", "United Kingdom", "1820", "1910"),
      ("1911", "female", "nurse", "United Kingdom", "1820", "1910"),
      ("1911", "female", "statistician", "United Kingdom", "1820", "1910")],
     (-0.1780, 51.4840, 20, 150)),
    ("Shakespeare Road", "Lambeth", "William Shakespeare",
     [("1880", "male", "playwright", "England", "1564", "1616"),
      ("1880", "male", "playwright", "England", "1564", "1616"),
      ("1880", "male", "poet", "England", "1564", "1616")],
     (-0.1030, 51.4590, 170, 900)),
    ("Dickens Square", "Southwark", "Charles Dickens",
     [("1930", "male", "writer", "England", "1812", "1870"),
      ("1930", "male", "novelist", "England", "1812", "1870"),
      ("1930", "male", "writer", "England", "1812", "1870")],
     (-0.0930, 51.4970, 0, 150)),
    ("Churchill Gardens", "City of Westminster", "Winston Churchill",
     [("1950", "male", "politician", "United Kingdom", "1874", "1965"),
      ("1950", "male", "politician", "United Kingdom", "1874", "1965"),
      ("1950", "male", "politician", "United Kingdom", "1874", "1965")],
     (-0.1420, 51.4860, 70, 400)),
    ("Elgin Avenue", "City of Westminster", "James Bruce, 8th Earl of Elgin",
     [("1865", "male", "diplomat", "United Kingdom", "1811", "1863"),
      ("1865", "", "diplomat", "United Kingdom", "1811", "1863"),
      ("1865", "male", "colonial administrator", "United Kingdom", "1811", "1863")],
     (-0.1950, 51.5270, 110, 1200)),
    ("Nelson Square", "Southwark", "Horatio Nelson",
     [("1807", "male", "naval officer", "England", "1758", "1805"),
      ("1810", "male", "naval officer", "England", "1758", "1805")],
     (-0.1030, 51.5030, 0, 120)),
    ("Mary Seacole Close", "Hackney", "Mary Seacole",
     [("2005", "female", "nurse", "Jamaica", "1805", "1881"),
      ("2005", "female", "nurse", "Jamaica", "1805", "1881"),
      ("2005", "female", "businesswoman", "Jamaica", "1805", "1881")],
     None),
]


def london():
    header = ["streetname", "annotator", "district", "denomination", "honoree", "gender", "occupation",
              "country", "dob", "dod", "honoree_url", "image_url"]
    rows = []
    ex = Extract(2000001)
    for street, district, honoree, answers, osm in LONDON:
        slug = honoree.replace(" ", "_")
        for i, (den, gender, occ, country, dob, dod) in enumerate(answers):
            rows.append([street, f"annotator-{i + 1}", district, den, honoree, gender, occ, country, dob, dod,
                         f"https://en.wikipedia.org/wiki/{slug}", ""])
        if osm is not None:
            osm_name = osm[1] if osm[0] == "rename" else street
            add_osm(ex, osm_name, district, osm)
    ex.add("Oxford Street", "City of Westminster", [line(-0.1500, 51.5150, 90, 1900)])
    ex.add("Strand", "City of Westminster", [line(-0.1250, 51.5085, 60, 1200)])
    write_csv(ROOT / "london" / "annotated_csv" / "annotations.csv", header, rows)
    ex.write(ROOT / "london" / "osm" / "extract.geojson")


# ---------------------------------------------------------------- New York

# record_id, streetname, district, denomination, honoree, gender, occupation, country, dob, dod, osm
NEWYORK = [
    ("nyc-0001", "Joe DiMaggio Highway", "Manhattan", "1999", "Joe DiMaggio", "male", "baseball player",
     "United States", "1914", "1999", ("chain", -74.0130, 40.7200, 15, 3000, 3)),
    ("nyc-0002", "Celia Cruz Way", "Bronx", "2004", "Celia Cruz", "female", "singer", "Cuba", "1925", "2003",
     (-73.9000, 40.8400, 20, 400)),
    ("nyc-0003", "Firefighter Daniel Moran Way", "Brooklyn", "2002", "Daniel Moran", "male", "firefighter",
     "United States", "1968", "2001", (-73.9800, 40.6700, 60, 300)),
    ("nyc-0004", "Police Officer Anna Reyes Way", "Queens", "2003", "Anna Reyes", "female", "police officer",
     "United States", "1972", "2001", (-73.8600, 40.7400, 120, 300)),
    ("nyc-0005", "Michael Shea Street", "Staten Island", "2002", "Michael Shea", "male", "9/11 victim",
     "United States", "1960", "2001", (-74.1200, 40.5900, 40, 400)),
    ("nyc-0006", "Duke Ellington Boulevard", "Manhattan", "1977", "Duke Ellington", "male", "jazz musician",
     "United States", "1899", "1974", (-73.9700, 40.7990, 120, 800)),
    ("nyc-0007", "Shirley Chisholm Circle", "Brooklyn", "2005", "Shirley Chisholm", "female", "politician",
     "United States", "1924", "2005", (-73.9400, 40.6800, 0, 100)),
    ("nyc-0008", "Cardinal O'Connor Way", "Manhattan", "2000", "John Joseph O'Connor", "male",
     "catholic priest", "United States", "1920", "2000",
     ("rename", "Cardinal O’Connor Way", -73.9760, 40.7585, 120, 250)),
    ("nyc-0009", "Edgar Allan Poe Street", "Manhattan", "1980", "Edgar Allan Poe", "male", "writer",
     "United States", "1809", "1849", (-73.9800, 40.7920, 120, 400)),
    ("nyc-0010", "Malcolm X Boulevard", "Manhattan", "1987", "Malcolm X", "male", "human rights activist",
     "United States", "1925", "1965", ("chain", -73.9450, 40.7980, 30, 2400, 2)),
    ("nyc-0011", "Firefighter John Rivera Ave", "Queens", "2002", "John Rivera", "male", "fire lieutenant",
     "United States", "1965", "2001", ("rename", "Firefighter John Rivera Avenue", -73.8300, 40.7100, 90, 600)),
    ("nyc-0012", "EMT Sarah Cole Street", "Bronx", "2004", "Sarah Cole", "female",
     "emergency medical technician", "United States", "1975", "2001", (-73.9100, 40.8200, 60, 300)),
    ("nyc-0013", "Joe DiMaggio Highway", "", "", "Joe DiMaggio", "", "", "", "", "", None),
    ("nyc-0014", "Lafayette Street", "Manhattan", "1826", "", "", "", "", "", "", (-73.9990, 40.7200, 20, 900)),
    ("nyc-0015", "LaGuardia Place", "Manhattan", "1987", "Fiorello La Guardia", "male", "politician",
     "United States", "1882", "1947", (-73.9980, 40.7270, 15, 300)),
    ("nyc-0016", "Peter Minuit Plaza", "Manhattan", "1998", "Peter Minuit", "male", "colonial governor",
     "Netherlands", "1580", "1638", (-74.0130, 40.7010, 0, 80)),
    ("nyc-0017", "Captain Neil Burke Way", "Brooklyn", "2002", "Neil Burke", "male", "fire captain",
     "United States", "1955", "2001", None),
    ("nyc-0018", "Lena Horne Street", "Brooklyn", "2031", "Lena Horne", "female", "singer", "United States",
     "1917", "2010", (-73.9500, 40.6750, 90, 300)),
]


def newyork():
    header = ["record_id", "streetname", "district", "denomination", "honoree", "gender", "occupation", "country",
              "dob", "dod", "honoree_url", "image_url"]
    rows = []
    ex = Extract(9000001)
    for rid, street, district, den, honoree, gender, occ, country, dob, dod, osm in NEWYORK:
        url = f"https://en.wikipedia.org/wiki/{honoree.replace(' ', '_')}" if honoree and gender else ""
        rows.append([rid, street, district, den, honoree, gender, occ, country, dob, dod, url, ""])
        if osm is not None:
            osm_name = osm[1] if osm[0] == "rename" else street
            add_osm(ex, osm_name, district, osm)
    ex.add("Broadway", "Manhattan", [line(-74.0100, 40.7100, 20, 3000, 4)])
    ex.add("Lexington Avenue", "Manhattan", [line(-73.9700, 40.7550, 30, 2000)])
    write_csv(ROOT / "newyork" / "curated" / "streets.csv", header, rows)
    ex.write(ROOT / "newyork" / "osm" / "extract.geojson")


def pipeline_config():
    config = {
        "output_dir": "out",
        "snapshot_time": "2024-05-01T00:00:00Z",
        "latest_year": 2024,
        "merge_radius_m": 2000,
        "cities": [
            {"city": "paris", "osm": "paris/osm/extract.geojson",
             "sources": [{"kind": "wikidata", "input": "paris/wikidata/streets.sparql.json", "entity": "Q90"}]},
            {"city": "vienna", "osm": "vienna/osm/extract.geojson",
             "sources": [{"kind": "wikihistory", "input": "vienna/wikihistory/pages", "translate": True}]},
            {"city": "london", "osm": "london/osm/extract.geojson",
             "sources": [{"kind": "csv", "input": "london/annotated_csv/annotations.csv"}]},
            {"city": "newyork", "osm": "newyork/osm/extract.geojson",
             "sources": [{"kind": "csv", "input": "newyork/curated/streets.csv"}]},
        ],
    }
    (ROOT / "pipeline.json").write_text(json.dumps(config, indent=2) + "\n", encoding="utf-8")


if __name__ == "__main__":
    paris()
    vienna()
    london()
    newyork()
    pipeline_config()
