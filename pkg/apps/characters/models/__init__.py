from apps.characters.models.character import Character, RationalIrrep
