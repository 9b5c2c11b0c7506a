# qverify/i18n.py

from pathlib import Path

import i18n

from qverify.config import LANGUAGE, TRANSLATIONS_DIR


def get_available_languages():
    """Get list of available language codes from translation files"""
    translations_path = Path(TRANSLATIONS_DIR)
    if not translations_path.exists():
        return ["en"]
    return sorted(f.stem for f in translations_path.glob("*.yaml"))


def setup_i18n(language=None):
    if str(TRANSLATIONS_DIR) not in i18n.load_path:
        i18n.load_path.append(str(TRANSLATIONS_DIR))
    i18n.set("filename_format", "{locale}.{format}")
    i18n.set("file_format", "yaml")
    i18n.set("fallback", "en")

    language = language or LANGUAGE
    if language not in get_available_languages():
        language = "en"

    # Force reload translations
    i18n.set("locale", None)
    i18n.set("locale", language)


def t(key, **kwargs):
    return i18n.t(key, **kwargs)
