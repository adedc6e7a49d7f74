"""
Ressource: textes d'aide de la ligne de commande (description et épilogue argparse).
"""

CLI_DESCRIPTION = """\
ArrLab – complexes de liens Δ_{A,H} d'arrangements de sous-espaces
dans les arrangements de Coxeter de types A et B.

Calcule en arithmétique exacte les polynômes caractéristiques et de queue,
les f/h-vecteurs, les fonctions de Hilbert, des ordres d'épluchage, et
vérifie les identités qui les relient contre des oracles par force brute.
"""

CLI_EPILOG = """\
Documents d'entrée (JSON, bloc YAML '---' facultatif en tête) :
  graphe          {"n": 3, "edges": [[1,2],[1,3],[2,3]]}
  hypergraphe     {"n": 4, "hyperedges": [[1,2,3],[3,4]]}
  graphe signé    {"n": 2, "positive": [[1,2]], "negative": [], "zero_vertices": [1]}
  arrangement A   {"ambient": {"family": "A", "n": 3},
                   "subspaces": [{"blocks": [[1,2]]}]}
  arrangement B   {"ambient": {"family": "B", "n": 2},
                   "subspaces": [{"zero": [1], "signed_blocks": []}]}

Options du bloc YAML : force, identity, member, seed.
Priorité : ligne de commande > bloc YAML > arrlab.yaml.

Identités (verify) :
  deletion-restriction, recursion, eulerian, single, theorem, steingrimsson,
  corollary, euler-wedge, chromatic, signed-chromatic, regions,
  intersection, shelling

Codes de sortie : 0 succès, 1 vérification en échec, 2 entrée invalide.
Variables d'environnement : ARRLAB_BUDGET ("A=9,B=6" ou un entier),
ARRLAB_CONFIG_DIR (dossier contenant arrlab.yaml).

Exemples :
  arrlab chi --input exemples/k3.json
  echo '{"n":3,"edges":[[1,2],[1,3],[2,3]]}' | arrlab verify steingrimsson --json
  arrlab report --threads 4 --catalog exemples/catalogue.yaml
"""
