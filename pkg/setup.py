from setuptools import find_packages, setup

setup(
    name="qverify",
    version="0.1.0",
    description="Truncated q-series engine and identity verifier for overpartition congruences",
    packages=find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.22",
        "pydantic>=2.6",
        "fastapi",
        "uvicorn",
        "sse-starlette",
        "janus",
        "termcolor",
        "pyyaml>=6.0",
        "python-i18n>=0.3.9",
        "python-dotenv>=0.19.1",
    ],
    extras_require={
        "test": ["pytest", "httpx"],
    },
    entry_points={
        "console_scripts": [
            "qverify=qverify.__main__:main",
        ],
    },
    include_package_data=True,
    package_data={
        "qverify": ["translations/*.yaml"],
    },
)
