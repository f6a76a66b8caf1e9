#!/usr/bin/env python3
"""Generate the derived resource files of the shipped language bundles:
word-frequency tables (log10 occurrences per billion words, wordfreq-style
bands) and small deterministic embedding files aligned with the bundle
vocabulary. Hand-maintained files (stopwords, connectives, CEFR, lexnet,
syllable rules) are not touched.

Run from the repository root:  python3 tools/build_bundles.py
"""

import pathlib
import random

ROOT = pathlib.Path(__file__).resolve().parent.parent / "resources"

EMBEDDING_DIM = 24

# (log10-per-billion band, words) per language. Band values approximate the
# familiar Zipf bands: ~9 for top function words, ~4 near the rare-word
# threshold, below 4 for genuinely rare vocabulary.
EN_BANDS = [
    (8.9, "the"), (8.6, "of and to"), (8.4, "a in is it"),
    (8.1, "you that he was for on are with as his they at be this"),
    (7.8, "have from or one had by word but not what all were we when"),
    (7.5, "your can said there use an each which she do how their if"),
    (7.2, "will up other about out many then them these so some her would make like him into time has look two more"),
    (6.9, "write go see number no way could people my than first water been call who oil its now find long down day did get come made may part"),
    (6.5, "over new sound take only little work know place year live me back give most very after thing our just name good sentence man think say great where help through much before"),
    (6.2, "line right too mean old any same tell boy follow came want show also around form three small set put end does another well large must big even such because turn here why ask went men read need land different home us move try kind hand picture again change off play spell air away animal house point page letter mother answer found study still learn should world high every near add food between own below country plant last school father keep tree never start city earth eye light thought head under story saw left dont few while along might close something seem next hard open example begin life always those both paper together got group often run"),
    (5.8, "important until children side feet car mile night walk white sea began grow took river four carry state once book hear stop without second later miss idea enough eat face watch far really almost let above girl sometimes mountain cut young talk soon list song being leave family body music color stand sun question fish area mark dog horse birds problem complete room knew since ever piece told usually didnt friends easy heard order red door sure become top ship across today during short better best however low hours black products happened whole measure remember early waves reached"),
    (5.4, "listen wind rock space covered fast several hold himself toward five step morning passed vowel true hundred against pattern numeral table north slowly money map farm pulled draw voice seen cold cried plan notice south sing war ground fall king town unit figure certain field travel wood fire upon done english road half ten fly gave box finally wait correct oh quickly person became shown minutes strong verb stars front feel fact inches street decided contain course surface produce building ocean class note nothing rest carefully scientists inside wheels stay green known island week less machine base ago stood plane system behind ran round boat game force brought understand warm common bring explain dry though language shape deep thousands yes clear equation yet government filled heat full hot check object am rule among"),
    (5.0, "noun power cannot able six size dark ball material special heavy fine pair circle include built knowledge analysis century energy evidence experience century approach community development economy education environment individual industry method policy process research resource society structure technology theory account action activity amount article author benefit category chapter concept context culture datum definition economy element factor feature function impact income issue item journal level major model network option period previous primary region section sector series similar source specific strategy task team text topic"),
    (4.6, "abandon abstract academic accumulate accurate achieve acquire adapt adequate adjacent adjust administrate advocate aggregate allocate alter ambiguous analogy annual anticipate apparent append appreciate appropriate approximate arbitrary assemble assess assign assist assume assure attain attitude attribute automate aware behalf bias bond brief bulk capable capacity cease challenge channel circumstance cite civil clarify classic clause code coherent coincide collapse commence comment commission commit commodity compatible compensate compile complement component compound comprehensive comprise compute conceive concentrate conclude concurrent conduct confer confine confirm conflict conform consent consequent considerable consist constant constitute constrain construct consult consume contact contemporary contradict contrary contrast contribute controversy convene converse convert convince cooperate coordinate core corporate correspond couple create credit criteria crucial currency cycle"),
    (4.2, "debate decade decline deduce define definite demonstrate denote deny depress derive design despite detect deviate device devote differentiate dimension diminish discrete discriminate displace display dispose distinct distort distribute diverse document domain domestic dominate draft drama duration dynamic economy edit element eliminate emerge emphasis empirical enable encounter enforce enhance enormous ensure entity environment equate equip equivalent erode error establish estate estimate ethic ethnic evaluate eventual evident evolve exceed exclude exhibit expand expert explicit exploit export expose external extract facilitate feature federal fee file finance finite flexible fluctuate focus format formula forthcoming foundation founded framework fund fundamental furthermore generate generation globe goal grade grant guarantee guideline hence hierarchy highlight hypothesis"),
    (3.7, "identical ideology ignorance illustrate imagery immigrate implement implicate implicit imply impose incentive incidence incline incorporate index indicate induce inevitable infer infrastructure inherent inhibit initial initiate injure innovate insert insight inspect instance institute instruct integral integrate integrity intelligence intense interact intermediate internal interpret interval intervene intrinsic investigate invoke involve isolate job justify label labor layer lecture legal legislate levy liberal license likewise link locate logic maintain manipulate manual margin mature maximize mechanism media mediate medical medium mental migrate military minimal minimize minimum ministry minor mode modify monitor motive mutual negate network neutral nonetheless norm notion nuclear objective obtain obvious occupy occur odd offset ongoing option orient outcome output overall overlap overseas panel paradigm paragraph parallel parameter participate partner passive perceive percent period persist perspective phase phenomenon philosophy physical plus policy portion pose positive potential practitioner precede precise predict predominant preliminary presume previous primary prime principal principle prior priority proceed process professional prohibit project promote proportion prospect protocol psychology publication publish purchase pursue"),
    (3.2, "qualitative quantify quote radical random range ratio rational react recover refine regime register regulate reinforce reject relax release relevant reluctance rely remove require research reside resolve resource respond restore restrain restrict retain reveal revenue reverse revise revolution rigid role route scenario schedule scheme scope section sector secure seek select sequence series sex shift significant similar simulate site so-called sole somewhat source specific specify sphere stable statistic status straightforward strategy stress structure style submit subordinate subsequent subsidy substitute successor sufficient sum summary supplement survey survive suspend sustain symbol tape target team technical technique technology temporary tense terminate terminology territory theme theory thereby thesis topic trace tradition transfer transform transit transmit transport trend trigger ultimate undergo underlie undertake uniform unify unique utilize valid vary vehicle version via violate virtual visible vision visual volume voluntary welfare whereas whereby widespread"),
    (2.6, "aberration abeyance abjure abrogate abscond abstruse accretion acerbic acumen adumbrate aeon alacrity amalgam ambivalence ameliorate anachronism anathema ancillary animus anomaly antipathy apocryphal apogee apotheosis approbation arcane ardor artifice ascetic asperity aspersion assiduous attenuate audacious austere avarice axiom"),
]

ES_BANDS = [
    (8.8, "de"), (8.6, "la que el en y"), (8.3, "a los se del las un por con no una su"),
    (7.9, "para es al lo como mas pero sus le ha me si sin sobre este ya entre cuando todo esta"),
    (7.5, "ser son dos tambien fue habia era muy anos hasta desde esta mi porque que solo han yo hay vez puede todos asi nos ni parte tiene"),
    (7.1, "uno donde bien tiempo mismo ese ahora cada e vida otro despues te otros aunque esa eso hace otra gobierno tan durante siempre dia tanto ella tres si dijo sido gran pais segun menos"),
    (6.7, "mundo ano antes estado contra sino forma caso nada hacer general estaba poco estos presidente mayor ante unos les algo hacia casa ellos ayer hecho primera mucho mientras ademas quien momento millones esto espana hombre estan pues hoy lugar madrid nacional trabajo otras pueblo"),
    (6.3, "agua historia libro mujer hijo noche casi manera tarde cosa cabeza fin ciudad persona mano grupo nuevo nueva luz muerte orden cuerpo familia campo tierra palabra semana problema cuenta hora guerra nombre amigo amor aire ojo calle papel punto sangre frente razon puerta"),
    (5.8, "escuela nino nina perro gato arbol bosque cielo color comida juego lluvia mesa montana pajaro pez piedra playa puente rey reina rio sol sombra viento flor fruta hermano hermana abuelo abuela cuento fiesta regalo sonrisa caballo conejo raton leon tigre oso lobo zorro tortuga estrella nube mar barco tren"),
    (5.3, "alegre antiguo bonito caliente cansado contento debil dulce enfermo feliz fuerte grande joven largo lento libre limpio lleno nuevo pequeno pobre rapido rico sano triste vacio valiente viejo amable oscuro claro frio"),
    (4.8, "aprender ayudar bailar buscar caminar cantar cocinar comer comprar contar correr crecer dormir empezar encontrar escribir escuchar esperar estudiar ganar hablar jugar leer llegar llevar llorar mirar nadar pagar pensar perder preguntar querer recordar saltar sentir soñar subir trabajar viajar vivir volar volver"),
    (4.3, "abundancia acontecimiento advertencia alcance amenaza analisis aportacion argumento asamblea aumento autoridad beneficio busqueda calidad cambio capacidad caracteristica circunstancia compromiso comunidad concepto conciencia condicion conducta conjunto conocimiento consecuencia construccion contexto crecimiento criterio cultura decision demanda desarrollo descubrimiento diferencia dificultad dimension direccion discurso economia ejemplo elemento empresa energia enfoque ensenanza entorno equipo espacio estructura estudio evolucion exigencia experiencia factor fenomeno funcion fundamento generacion"),
    (3.6, "habilidad hallazgo hipotesis identidad impacto importancia impulso incidencia incremento indicador influencia informe iniciativa innovacion instrumento integracion intercambio interpretacion investigacion jerarquia magnitud mecanismo metodologia modalidad nocion objetivo obstaculo operacion organismo paradigma parametro participacion perspectiva planteamiento politica porcentaje practica procedimiento proceso promedio proporcion propuesta proyecto referencia reflexion regimen registro relacion rendimiento requisito resultado sintesis sistema tendencia teoria trayectoria variable vinculo"),
    (3.0, "abigarrado abnegacion abolengo abstruso acendrado acerbo acuciante adusto alborozo ambages anacronismo anodino apocado atisbo avatar baladi bisono cariz celeridad cenit conspicuo denuedo desazon dicotomia efimero elucubracion enjundia escueto esquivo fehaciente ignoto inefable inexorable laconico nimio oprobio paroxismo perenne prosaico soslayo taciturno ubicuo vetusto"),
]

EU_BANDS = [
    (8.7, "eta"), (8.4, "da bat ez du"), (8.1, "ere dute zen egin izan dira de la el"),
    (7.7, "baina dago beste urte izango horrek gaur hori ditu honen arabera den duen zuen bere edo berri"),
    (7.3, "euskal gero behar ondoren artean izan dela lehen bi egun bezala baino gehiago arte orain horretan guztiak atzo hiru esan zela horren baita ziren honetan"),
    (6.9, "urtean herri etxe lan jende ordu leku modu arazo hitz buru esku begi bide mendi itsaso zeru lur haize euri elur ibai baso zuhaitz lore txori arrain harri hondartza zubi errege erregina ibilbide"),
    (6.4, "eskola haur txakur katu sagar ogi ur esne ardo gazta haragi arraultza barazki fruta opari jai ipuin irribarre zaldi untxi sagu lehoi hartz otso azeri dordoka izar hodei ontzi tren auto hegazkin"),
    (5.9, "alai zahar polit bero nekatu pozik ahul gozo gaixo zoriontsu indartsu handi gazte luze motel aske garbi bete txiki pobre azkar aberats osasuntsu triste huts ausart eder ilun argi hotz atsegin"),
    (5.4, "ikasi lagundu dantzatu bilatu ibili abestu sukaldatu jan erosi kontatu korrika hazi lo hasi aurkitu idatzi entzun itxaron ikasketa irabazi hitz jolastu irakurri iritsi eraman negar begiratu igeri ordaindu pentsatu galdu galdetu nahi gogoratu salto sentitu amestu igo lan bidaiatu bizi hegan itzuli"),
    (4.8, "aberastasun gertaera ohartarazpen irismen mehatxu azterketa ekarpen argudio batzar igoera agintaritza onura bilaketa kalitate aldaketa gaitasun ezaugarri inguruabar konpromiso komunitate kontzeptu kontzientzia baldintza jokabide multzo ezagutza ondorio eraikuntza testuinguru hazkunde irizpide kultura erabaki eskari garapen aurkikuntza desberdintasun zailtasun dimentsio norabide diskurtso ekonomia adibide elementu enpresa energia ikuspegi irakaskuntza ingurune talde espazio egitura ikasketa bilakaera eskakizun esperientzia faktore fenomeno funtzio oinarri belaunaldi"),
    (4.2, "trebetasun aurkikunde hipotesi nortasun eragin garrantzi bulkada intzidentzia gehikuntza adierazle txosten ekimen berrikuntza tresna integrazio truke interpretazio ikerketa hierarkia magnitudo mekanismo metodologia modalitate nozio helburu oztopo eragiketa erakunde paradigma parametro partaidetza perspektiba planteamendu politika ehuneko praktika prozedura prozesu batezbesteko proportzio proposamen proiektu erreferentzia hausnarketa erregimen erregistro erlazio errendimendu betekizun emaitza sintesi sistema joera teoria ibilbide aldagai lotura"),
    (3.4, "ahuntz aztarna bitxikeria burutazio deliberamendu ekinbide elezahar gorabehera halabehar hondar ilunabar jakituria kemen lausotasun lilura malenkonia nabardura oldozpen oroimin ozartasun sosegu urradura zirrara zorabio"),
]


def parse_bands(bands):
    rng_jitter = random.Random(7)
    entries = []
    seen = set()
    for value, words in bands:
        for word in words.split():
            word = word.lower()
            if word in seen:
                continue
            seen.add(word)
            # small deterministic jitter keeps band values from being ties
            entries.append((word, round(value + rng_jitter.uniform(-0.15, 0.15), 3)))
    return entries


def write_freq(lang, entries):
    path = ROOT / lang / "freq.tsv"
    lines = [f"{w}\t{v}" for w, v in entries]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {path} ({len(entries)} entries)")


def write_embeddings(lang, entries, seed):
    rng = random.Random(seed)
    vocab = [w for w, _ in entries]
    path = ROOT / lang / "embeddings.vec"
    lines = [f"{len(vocab)} {EMBEDDING_DIM}"]
    for word in vocab:
        vec = [rng.gauss(0.0, 1.0) for _ in range(EMBEDDING_DIM)]
        norm = sum(v * v for v in vec) ** 0.5
        vec = [v / norm for v in vec]
        lines.append(word + " " + " ".join(f"{v:.5f}" for v in vec))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {path} ({len(vocab)} vectors, dim {EMBEDDING_DIM})")


def main():
    for lang, bands, seed in [
        ("en", EN_BANDS, 101),
        ("es", ES_BANDS, 202),
        ("eu", EU_BANDS, 303),
    ]:
        entries = parse_bands(bands)
        write_freq(lang, entries)
        write_embeddings(lang, entries, seed)


if __name__ == "__main__":
    main()
